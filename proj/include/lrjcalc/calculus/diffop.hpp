#pragma once

#include <vector>

#include "lrjcalc/cas/expr.hpp"

namespace lrj::calc {

using cas::ScalarExpr;

/// First-order differential operator phi = s*1 + sum_i v^i d/dx^i on an
/// n-dimensional chart.  Coordinates in the extended basis are numbered 0
/// (the unit operator) through n (d/dx^n).  Components are kept normalized.
class DiffOp {
 public:
  explicit DiffOp(int n = 0);
  DiffOp(ScalarExpr scalar, std::vector<ScalarExpr> vec);

  static DiffOp unit(int n);
  static DiffOp partial(int n, int coord);  // d/dx^coord, coord in [0, n)
  static DiffOp basis(int n, int k);        // extended basis element k in [0, n]
  static DiffOp multiplication(int n, const ScalarExpr& f);
  static DiffOp vector_field(std::vector<ScalarExpr> vec);

  int dim() const { return static_cast<int>(vec_.size()); }
  const ScalarExpr& scalar() const { return scalar_; }
  const std::vector<ScalarExpr>& vec() const { return vec_; }
  /// Coefficient on extended basis element k.
  const ScalarExpr& component(int k) const { return k == 0 ? scalar_ : vec_[static_cast<std::size_t>(k - 1)]; }
  bool is_zero() const;
  bool is_vector_field() const { return scalar_.is_zero_literal(); }
  /// The vector field part X = phi - phi(1).
  DiffOp vector_part() const { return DiffOp(ScalarExpr(0), vec_); }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const ScalarExpr& f, const DiffOp& a);
  DiffOp operator-() const;
  friend bool operator==(const DiffOp& a, const DiffOp& b);

 private:
  ScalarExpr scalar_;
  std::vector<ScalarExpr> vec_;
};

/// phi(f) = f*phi(1) + X(f).
ScalarExpr apply(const DiffOp& phi, const ScalarExpr& f);

/// Commutator [phi, psi].  With phi = (s, v), psi = (t, w): scalar part
/// v(t) - w(s), vector part the Lie bracket [v, w].
DiffOp bracket(const DiffOp& phi, const DiffOp& psi);

}  // namespace lrj::calc
