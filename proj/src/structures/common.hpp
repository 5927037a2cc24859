#pragma once

// Small helpers shared by the structure checks.

#include <vector>

#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/calculus/compare.hpp"
#include "lrjcalc/calculus/suites.hpp"
#include "lrjcalc/structures/structures.hpp"

namespace lrj::structures::detail {

inline SkewForm delta1(int n) { return SkewForm::covector(n, 0); }

inline cas::Verdict form_is_zero(const SkewForm& f, const Context& ctx) {
  return calc::compare_forms(f, SkewForm(f.dim(), f.degree()), ctx.zero, ctx.coords());
}

inline cas::Verdict forms_equal(const SkewForm& a, const SkewForm& b, const Context& ctx) {
  return calc::compare_forms(a, b, ctx.zero, ctx.coords());
}

inline cas::Verdict scalars_equal(const ScalarExpr& a, const ScalarExpr& b, const Context& ctx,
                                  const std::string& label = {}) {
  return calc::compare_scalars(a, b, ctx.zero, ctx.coords(), label);
}

inline ScalarExpr eval1(const SkewForm& f, const DiffOp& phi) {
  const DiffOp a[] = {phi};
  return f.evaluate(a);
}

inline ScalarExpr eval2(const SkewForm& f, const DiffOp& phi, const DiffOp& psi) {
  const DiffOp a[] = {phi, psi};
  return f.evaluate(a);
}

/// Wedge power f^k (shuffle convention), k >= 1.
inline SkewForm wedge_power(const SkewForm& f, int k) {
  SkewForm out = f;
  for (int i = 1; i < k; ++i) out = calc::wedge(out, f);
  return out;
}

/// Pfaffian of the n x n matrix f(d_i, d_j) of a 2-form on vector fields.
ScalarExpr pfaffian_on_x(const SkewForm& f);

/// Pfaffian of the Gram matrix f(v_a, v_b).
ScalarExpr pfaffian_on(const SkewForm& f, const std::vector<DiffOp>& v);

/// Projections d_i - theta(d_i) T of the coordinate fields, dropping the
/// index where T has the component chosen as pivot (a nonzero constant if
/// one exists).  Spans { X : theta(X) = 0 } when theta(T) = 1.
std::vector<DiffOp> projected_basis(const SkewForm& theta, const DiffOp& T, const Context& ctx);

/// Failure naming the chart dimension problem.
cas::Verdict dimension_failure(const Context& ctx, bool want_odd);

}  // namespace lrj::structures::detail
