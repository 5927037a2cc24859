#include "common.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/errors.hpp"
#include "lrjcalc/structures/linear.hpp"

namespace lrj::structures {

using namespace detail;
using calc::delta;
using calc::interior;
using calc::wedge;

namespace {

calc::Index full_index(int n) {
  calc::Index all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return all;
}

// The unique X in Ker beta with Omega(X, Y) = nu(Y) for Y in Ker beta, from
// the rectangular system beta(X) = 0, Omega(X, P d_i) = nu(P d_i).
DiffOp kernel_preimage(const ContactData& cd, const std::vector<DiffOp>& proj, const SkewForm& nu, const Context& ctx) {
  const int n = ctx.dim();
  const int rows = 1 + static_cast<int>(proj.size());
  std::vector<ScalarExpr> a(static_cast<std::size_t>(rows * n));
  std::vector<ScalarExpr> b(static_cast<std::size_t>(rows));
  for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(j)] = cd.beta.form().component({j + 1});
  for (std::size_t r = 0; r < proj.size(); ++r) {
    const auto row = static_cast<std::size_t>(r + 1);
    for (int j = 0; j < n; ++j) {
      a[row * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
          eval2(cd.Omega.form(), DiffOp::partial(n, j), proj[r]);
    }
    b[row] = eval1(nu, proj[r]);
  }
  const auto x = solve_linear(std::move(a), std::move(b), rows, n, ctx.zero);
  return DiffOp::vector_field(x);
}

}  // namespace

VerificationReport contact_data_check(const ContactData& cd, const Context& ctx) {
  const int n = ctx.dim();
  VerificationReport rep{"contact", {}, {}};
  if (n % 2 == 0) {
    rep.add("contact.dimension", "dim M = 2m+1", dimension_failure(ctx, true));
    return rep;
  }
  const SkewForm& beta = cd.beta.form();
  const SkewForm& Omega = cd.Omega.form();
  CheckRunner run;
  run.add("contact.reeb_is_field", "E(1) = 0", [&] { return scalars_equal(cd.E.scalar(), 0, ctx); });
  run.add("contact.beta_on_reeb", "beta(E) = 1", [&] { return scalars_equal(eval1(beta, cd.E), 1, ctx); });
  run.add("contact.reeb_in_kernel", "i_E Omega = 0", [&] { return form_is_zero(interior(cd.E, Omega), ctx); });
  run.add("contact.volume", "beta ^ Omega^m nowhere zero", [&] {
    const SkewForm top = n == 1 ? beta : wedge(beta, wedge_power(Omega, (n - 1) / 2));
    const ScalarExpr coeff = top.component(full_index(n));
    cas::Verdict v = cas::is_nonvanishing(coeff, ctx.zero);
    v.detail = "coefficient " + cas::to_string(coeff, ctx.coords()) + (v.detail.empty() ? "" : ": " + v.detail);
    return v;
  });
  run.add("contact.splitting", "X = (X - beta(X) E) + beta(X) E with beta(X - beta(X) E) = 0", [&] {
    calc::RandomSource src(n, calc::instance_seed(ctx.zero.plan.seed, 31, 0));
    cas::Verdict acc;
    for (int k = 0; k < 5; ++k) {
      const DiffOp X = src.vector_field();
      const ScalarExpr b = eval1(beta, X);
      const DiffOp kernel = X - b * cd.E;
      const std::string label = "X = " + calc::to_string(X, ctx.coords());
      calc::merge_into(acc, scalars_equal(eval1(beta, kernel), 0, ctx, label));
      calc::merge_into(acc, calc::compare_ops(kernel + b * cd.E, X, ctx.zero, ctx.coords()));
    }
    return acc;
  });
  run.run_into(rep, ctx);
  return rep;
}

LiftedContact lift_contact(const ContactData& cd, const cas::Rational& c, const ScalarExpr& g, const Context& ctx,
                           int inverse_samples) {
  const int n = ctx.dim();
  LiftedContact out{cd, c, cas::normalize(g), SkewForm(n, 1), SkewForm(n, 2), SkewForm(n, 2), AlphaForm(n), false,
                    {"lift", {}, {}}};
  VerificationReport& rep = out.report;
  rep.append(contact_data_check(cd, ctx));
  rep.subject = "lift";
  if (!rep.passed()) {
    rep.notes.push_back("contact data does not verify; lift not constructed");
    return out;
  }
  const SkewForm& beta = cd.beta.form();
  const SkewForm& Omega = cd.Omega.form();
  const XForm dbeta = calc::exterior_d(cd.beta);
  const XForm constraint = calc::exterior_d(XForm(out.g * beta + interior(cd.E, dbeta.form())));
  rep.add("lift.admissible", "d[g beta + i_E d beta] = 0", form_is_zero(constraint.form(), ctx));
  if (!rep.checks.back().verdict.passed()) {
    rep.notes.push_back("alpha(E) = " + cas::to_string(out.g, ctx.coords()) + " rejected");
    return out;
  }
  out.admissible = true;

  // Projection P: unit -> 0, d_i -> d_i - beta_i E.
  std::vector<DiffOp> P(static_cast<std::size_t>(n + 1), DiffOp(n));
  for (int i = 1; i <= n; ++i) {
    P[static_cast<std::size_t>(i)] = DiffOp::partial(n, i - 1) - beta.component({i}) * cd.E;
  }
  out.beta_tilde = calc::lift_xform(cd.beta);
  for (const auto& idx : calc::all_indices(n, 2)) {
    out.Omega_bar.set(idx, eval2(Omega, P[static_cast<std::size_t>(idx[0])], P[static_cast<std::size_t>(idx[1])]));
  }
  const SkewForm d1 = delta1(n);
  out.Omega_tilde = out.Omega_bar + wedge(d1, out.beta_tilde);
  const SkewForm dbt = delta(out.beta_tilde);
  out.alpha = AlphaForm(cas::normalize(1 + ScalarExpr(c)) * d1 + interior(cd.E, dbt) + out.g * out.beta_tilde);

  const SkewForm& Wt = out.Omega_tilde;
  const SkewForm& alpha = out.alpha.form();
  const DiffOp one = DiffOp::unit(n);
  const SkewForm dWt = delta(Wt);

  CheckRunner run;
  run.add("lift.unit_kills_bar", "i_1 Omega_bar = 0", [&] { return form_is_zero(interior(one, out.Omega_bar), ctx); });
  run.add("lift.unit_contraction", "i_1 Omega~ = beta~",
          [&] { return forms_equal(interior(one, Wt), out.beta_tilde, ctx); });
  run.add("lift.reeb_contraction", "i_E Omega~ = -delta1", [&] { return forms_equal(interior(cd.E, Wt), -d1, ctx); });
  run.add("lift.bar_restricts", "Omega_bar|X x X = Omega",
          [&] { return forms_equal(calc::restrict_to_x(out.Omega_bar).form(), Omega, ctx); });
  run.add("lift.nondegenerate", "Pf(Omega~) != 0", [&] {
    const ScalarExpr pf = calc::pfaffian(Wt);
    cas::Verdict v = cas::is_nonvanishing(pf, ctx.zero);
    v.detail = "Pfaffian " + cas::to_string(pf, ctx.coords()) + (v.detail.empty() ? "" : ": " + v.detail);
    return v;
  });
  run.add("lift.inverse_round_trip", "phi = nu(E) + X - nu(1) E satisfies i_phi Omega~ = nu", [&] {
    const std::vector<DiffOp> proj(P.begin() + 1, P.end());
    calc::RandomSource src(n, calc::instance_seed(ctx.zero.plan.seed, 41, 0));
    cas::Verdict acc;
    for (int k = 0; k < inverse_samples; ++k) {
      const SkewForm nu = src.form(1);
      const DiffOp X = kernel_preimage(cd, proj, nu, ctx);
      const DiffOp phi = DiffOp::multiplication(n, eval1(nu, cd.E)) + X - nu.component({0}) * cd.E;
      cas::Verdict v = forms_equal(interior(phi, Wt), nu, ctx);
      if (!v.passed()) v.detail = "nu = " + calc::to_string(nu, ctx.coords()) + ": " + v.detail;
      calc::merge_into(acc, v);
    }
    if (acc.passed()) acc.detail = std::to_string(inverse_samples) + " round trips";
    return acc;
  });
  run.add("lift.alpha_unit", "alpha(1) = c", [&] { return scalars_equal(out.alpha.unit_value(), ScalarExpr(c), ctx); });
  run.add("lift.alpha_reeb", "alpha(E) = g", [&] { return scalars_equal(out.alpha(cd.E), out.g, ctx); });
  run.add("lift.rho_alpha", "delta alpha = delta1 ^ alpha",
          [&] { return forms_equal(delta(alpha), wedge(d1, alpha), ctx); });
  run.add("lift.scaled_form", "[1 + alpha(1)] Omega~ = delta beta~ + alpha ^ beta~", [&] {
    return forms_equal((1 + out.alpha.unit_value()) * Wt, dbt + wedge(alpha, out.beta_tilde), ctx);
  });
  run.add("lift.reeb_identity", "alpha(E) Omega~ = delta1 ^ alpha - i_E delta Omega~", [&] {
    return forms_equal(out.alpha(cd.E) * Wt, wedge(d1, alpha) - interior(cd.E, dWt), ctx);
  });
  run.add("lift.kernel_identity", "beta[X, E] Omega~ = alpha ^ i_X Omega~ - i_X delta Omega~ for X in Ker beta", [&] {
    cas::Verdict acc;
    for (const auto& X : projected_basis(beta, cd.E, ctx)) {
      const ScalarExpr coeff = eval1(beta, calc::bracket(X, cd.E));
      cas::Verdict v = forms_equal(coeff * Wt, wedge(alpha, interior(X, Wt)) - interior(X, dWt), ctx);
      if (!v.passed()) v.detail = "X = " + calc::to_string(X, ctx.coords()) + ": " + v.detail;
      calc::merge_into(acc, v);
    }
    return acc;
  });
  run.add("lift.conformal_closure", "delta Omega~ = -alpha ^ Omega~",
          [&] { return form_is_zero(dWt + wedge(alpha, Wt), ctx); });
  run.run_into(rep, ctx);
  return out;
}

}  // namespace lrj::structures
