#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lrjcalc/calculus/diffop.hpp"

namespace lrj::calc {

/// Strictly increasing tuple over the extended basis {0 = unit, 1..n}.
using Index = std::vector<int>;

/// Degree-p skew-symmetric C-infinity-multilinear form on D(M), stored by its
/// values on increasing tuples of extended basis elements.  Only nonzero
/// normalized components are kept, so two forms are equal iff their maps are
/// structurally equal.
class SkewForm {
 public:
  using Components = std::map<Index, ScalarExpr>;

  SkewForm(int n = 0, int degree = 0);
  static SkewForm scalar(int n, const ScalarExpr& f);
  /// The dual covector e^k (k = 0 is delta1, k = i > 0 is dx^i lifted).
  static SkewForm covector(int n, int k);

  int dim() const { return n_; }
  int degree() const { return degree_; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Value on an increasing tuple; 0 when absent.
  ScalarExpr component(const Index& idx) const;
  /// Value on an arbitrary tuple of basis indices (sign of the sorting
  /// permutation; 0 for repeated entries).
  ScalarExpr value_on_basis(std::span<const int> tuple) const;
  /// Degree-0 value.
  ScalarExpr as_scalar() const { return component({}); }

  void set(Index idx, const ScalarExpr& value);  // normalizes; validates idx

  /// eta(phi_1, ..., phi_p) by multilinear expansion.
  ScalarExpr evaluate(std::span<const DiffOp> ops) const;

  /// True when no stored tuple contains the unit index.
  bool annihilates_unit() const;

  friend SkewForm operator+(const SkewForm& a, const SkewForm& b);
  friend SkewForm operator-(const SkewForm& a, const SkewForm& b);
  friend SkewForm operator*(const ScalarExpr& f, const SkewForm& a);
  SkewForm operator-() const;
  friend bool operator==(const SkewForm& a, const SkewForm& b);

 private:
  int n_;
  int degree_;
  Components comps_;
};

/// Accumulates contributions per tuple and normalizes each sum once.
class FormBuilder {
 public:
  FormBuilder(int n, int degree) : n_(n), degree_(degree) {}
  void add(const Index& idx, ScalarExpr term);
  SkewForm build() const;

 private:
  int n_;
  int degree_;
  std::map<Index, std::vector<ScalarExpr>> terms_;
};

/// A form on vector fields: a SkewForm with no component on a tuple that
/// contains the unit index.
class XForm {
 public:
  XForm(int n = 0, int degree = 0) : form_(n, degree) {}
  explicit XForm(SkewForm f);  // throws std::invalid_argument on a unit component
  const SkewForm& form() const { return form_; }
  int dim() const { return form_.dim(); }
  int degree() const { return form_.degree(); }

 private:
  SkewForm form_;
};

/// Degree-1 form alpha on D(M) with its value on the unit operator.
class AlphaForm {
 public:
  AlphaForm(int n = 0) : AlphaForm(SkewForm(n, 1)) {}  // NOLINT(google-explicit-constructor)
  explicit AlphaForm(SkewForm f);  // throws std::invalid_argument unless degree 1
  const SkewForm& form() const { return form_; }
  int dim() const { return form_.dim(); }
  const ScalarExpr& unit_value() const { return unit_; }
  ScalarExpr operator()(const DiffOp& phi) const;

 private:
  SkewForm form_;
  ScalarExpr unit_;
};

/// Human-readable tuple such as "(1,d/dx,d/dy)".
std::string render_index(const Index& idx, std::span<const std::string> coords);

}  // namespace lrj::calc

namespace lrj::calc {

/// All strictly increasing tuples of length p over {0..n}, in lexicographic order.
std::vector<Index> all_indices(int n, int p);

/// Text in the .geo form syntax: terms "c*dx^dy", with "u" for the unit
/// covector; "0" for the zero form; the bare scalar for degree 0.
std::string to_string(const SkewForm& f, std::span<const std::string> coords);

/// Text in the .geo operator syntax, e.g. "2 + y*d/dx - d/dz".
std::string to_string(const DiffOp& phi, std::span<const std::string> coords);

}  // namespace lrj::calc
