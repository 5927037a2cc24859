#include "lrjcalc/calculus/random.hpp"

#include "lrjcalc/calculus/cartan.hpp"

namespace lrj::calc {

int RandomSource::pick(int count) { return std::uniform_int_distribution<int>(0, count - 1)(rng_); }

ScalarExpr RandomSource::polynomial(int terms, int max_degree) {
  std::vector<ScalarExpr> out;
  for (int t = 0; t < terms; ++t) {
    const int c = pick(7) - 3;
    if (c == 0) continue;
    std::vector<ScalarExpr> factors{ScalarExpr(c)};
    const int deg = pick(max_degree + 1);
    for (int d = 0; d < deg; ++d) factors.push_back(ScalarExpr::variable(pick(n_)));
    out.push_back(cas::product(factors));
  }
  return cas::sum(out);
}

DiffOp RandomSource::diffop() {
  std::vector<ScalarExpr> v;
  for (int i = 0; i < n_; ++i) v.push_back(coin() ? polynomial(2) : ScalarExpr(0));
  return DiffOp(polynomial(2), std::move(v));
}

DiffOp RandomSource::vector_field() { return diffop().vector_part(); }

SkewForm RandomSource::form(int degree) {
  SkewForm f(n_, degree);
  for (const auto& idx : all_indices(n_, degree)) {
    if (degree == 0 || coin()) f.set(idx, polynomial(2));
  }
  return f;
}

XForm RandomSource::xform(int degree) { return restrict_to_x(form(degree)); }

AlphaForm RandomSource::admissible_alpha() {
  const ScalarExpr f = polynomial(3, 3);
  SkewForm a = lift_xform(restrict_to_x(delta(SkewForm::scalar(n_, f))));
  a.set({0}, ScalarExpr(pick(7) - 3));
  return AlphaForm(a);
}

AlphaForm RandomSource::alpha_nonconstant_unit() {
  SkewForm a = admissible_alpha().form();
  ScalarExpr u = ScalarExpr::variable(pick(n_)) * (1 + pick(3)) + (pick(7) - 3);
  a.set({0}, u);
  return AlphaForm(a);
}

AlphaForm RandomSource::alpha_not_closed() {
  SkewForm a = admissible_alpha().form();
  // Add x^j dx^i with i != j, whose differential is -dx^i ^ dx^j (nonzero).
  const int i = pick(n_);
  int j = pick(n_ - 1);
  if (j >= i) ++j;
  a.set({i + 1}, a.component({i + 1}) + ScalarExpr(1 + pick(3)) * ScalarExpr::variable(j));
  return AlphaForm(a);
}

}  // namespace lrj::calc
