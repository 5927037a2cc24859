#include "lrjcalc/calculus/diffop.hpp"

#include <stdexcept>

#include "lrjcalc/cas/normalize.hpp"

namespace lrj::calc {

namespace {
void require_same_dim(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operators live on charts of different dimension");
}

// X(f) for the vector part only.
ScalarExpr derivative_along(const std::vector<ScalarExpr>& v, const ScalarExpr& f) {
  std::vector<ScalarExpr> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero_literal()) continue;
    terms.push_back(v[i] * cas::diff(f, static_cast<int>(i)));
  }
  return cas::sum(terms);
}
}  // namespace

DiffOp::DiffOp(int n) : vec_(static_cast<std::size_t>(n)) {}

DiffOp::DiffOp(ScalarExpr scalar, std::vector<ScalarExpr> vec)
    : scalar_(cas::normalize(scalar)), vec_(std::move(vec)) {
  for (auto& c : vec_) c = cas::normalize(c);
}

DiffOp DiffOp::unit(int n) { return basis(n, 0); }

DiffOp DiffOp::partial(int n, int coord) {
  if (coord < 0 || coord >= n) throw std::out_of_range("no coordinate " + std::to_string(coord));
  return basis(n, coord + 1);
}

DiffOp DiffOp::basis(int n, int k) {
  if (k < 0 || k > n) throw std::out_of_range("extended basis index out of range");
  DiffOp d(n);
  if (k == 0) {
    d.scalar_ = ScalarExpr(1);
  } else {
    d.vec_[static_cast<std::size_t>(k - 1)] = ScalarExpr(1);
  }
  return d;
}

DiffOp DiffOp::multiplication(int n, const ScalarExpr& f) {
  return DiffOp(f, std::vector<ScalarExpr>(static_cast<std::size_t>(n)));
}

DiffOp DiffOp::vector_field(std::vector<ScalarExpr> vec) { return DiffOp(ScalarExpr(0), std::move(vec)); }

bool DiffOp::is_zero() const {
  if (!scalar_.is_zero_literal()) return false;
  for (const auto& c : vec_) {
    if (!c.is_zero_literal()) return false;
  }
  return true;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  require_same_dim(a, b);
  std::vector<ScalarExpr> v(a.vec_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.vec_[i] + b.vec_[i];
  return DiffOp(a.scalar_ + b.scalar_, std::move(v));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

DiffOp operator*(const ScalarExpr& f, const DiffOp& a) {
  std::vector<ScalarExpr> v(a.vec_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f * a.vec_[i];
  return DiffOp(f * a.scalar_, std::move(v));
}

DiffOp DiffOp::operator-() const { return ScalarExpr(-1) * *this; }

bool operator==(const DiffOp& a, const DiffOp& b) {
  if (a.dim() != b.dim() || !cas::structurally_equal(a.scalar_, b.scalar_)) return false;
  for (std::size_t i = 0; i < a.vec_.size(); ++i) {
    if (!cas::structurally_equal(a.vec_[i], b.vec_[i])) return false;
  }
  return true;
}

ScalarExpr apply(const DiffOp& phi, const ScalarExpr& f) {
  return cas::normalize(f * phi.scalar() + derivative_along(phi.vec(), f));
}

DiffOp bracket(const DiffOp& phi, const DiffOp& psi) {
  require_same_dim(phi, psi);
  const ScalarExpr s = derivative_along(phi.vec(), psi.scalar()) - derivative_along(psi.vec(), phi.scalar());
  std::vector<ScalarExpr> v(phi.vec().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = derivative_along(phi.vec(), psi.vec()[i]) - derivative_along(psi.vec(), phi.vec()[i]);
  }
  return DiffOp(s, std::move(v));
}

}  // namespace lrj::calc
