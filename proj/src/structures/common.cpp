#include "common.hpp"

#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/errors.hpp"
#include "lrjcalc/structures/linear.hpp"

namespace lrj::structures::detail {

ScalarExpr pfaffian_on_x(const SkewForm& f) {
  const int n = f.dim();
  std::vector<ScalarExpr> m(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int t[] = {i + 1, j + 1};
      m[static_cast<std::size_t>(i * n + j)] = f.value_on_basis(t);
    }
  }
  return calc::pfaffian(m, n);
}

ScalarExpr pfaffian_on(const SkewForm& f, const std::vector<DiffOp>& v) {
  const int k = static_cast<int>(v.size());
  std::vector<ScalarExpr> m(static_cast<std::size_t>(k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      m[static_cast<std::size_t>(i * k + j)] = i == j ? ScalarExpr(0) : eval2(f, v[i], v[j]);
    }
  }
  return calc::pfaffian(m, k);
}

std::vector<DiffOp> projected_basis(const SkewForm& theta, const DiffOp& T, const Context& ctx) {
  const int n = theta.dim();
  int pivot = -1;
  unsigned best = 0;
  for (int i = 0; i < n; ++i) {
    const ScalarExpr& c = T.vec()[static_cast<std::size_t>(i)];
    if (c.is_zero_literal()) continue;
    const unsigned cost = c.is_constant() ? 0 : 1 + cas::rational_degree(c);
    if (cost > 0 && !cas::is_nonvanishing(c, ctx.zero).passed()) continue;
    if (pivot < 0 || cost < best) {
      pivot = i;
      best = cost;
    }
  }
  if (pivot < 0) throw DegenerateError("transversal field has no nonvanishing component", to_string(T, ctx.coords()));
  std::vector<DiffOp> out;
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    const DiffOp di = DiffOp::partial(n, i);
    out.push_back(di - eval1(theta, di) * T);
  }
  return out;
}

cas::Verdict dimension_failure(const Context& ctx, bool want_odd) {
  return structural_failure(std::string("requires an ") + (want_odd ? "odd" : "even") +
                            " chart dimension (skew-symmetric matrices of odd size are singular); chart " +
                            ctx.chart.name() + " has dimension " + std::to_string(ctx.dim()));
}

}  // namespace lrj::structures::detail
