#include <stdexcept>

#include "common.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/errors.hpp"

namespace lrj::structures {

using namespace detail;
using calc::delta;
using calc::delta_alpha;
using calc::interior;
using calc::wedge;

VerificationReport check_lcs(const LcsData& d, const Context& ctx) {
  VerificationReport rep{"lcs", {}, {}};
  if (d.alpha.degree() != 1 || d.omega.degree() != 2) throw std::invalid_argument("lcs needs a 1-form and a 2-form");
  if (ctx.dim() % 2 != 0) rep.add("lcs.dimension", "dim M even", dimension_failure(ctx, false));
  CheckRunner run;
  run.add("lcs.alpha_closed", "d alpha = 0",
          [&] { return form_is_zero(calc::exterior_d(d.alpha).form(), ctx); });
  run.add("lcs.conformal", "d omega = -alpha ^ omega", [&] {
    return form_is_zero(calc::exterior_d(d.omega).form() + wedge(d.alpha.form(), d.omega.form()), ctx);
  });
  run.add("lcs.nondegenerate", "Pf(omega) != 0 on X(M)", [&] {
    if (ctx.dim() % 2 != 0) return dimension_failure(ctx, false);
    cas::Verdict v = cas::is_nonvanishing(pfaffian_on_x(d.omega.form()), ctx.zero);
    if (!v.passed()) v.detail = "Pfaffian " + cas::to_string(pfaffian_on_x(d.omega.form()), ctx.coords()) + ": " + v.detail;
    return v;
  });
  run.run_into(rep, ctx);
  if (d.alpha.form().is_zero()) rep.notes.push_back("alpha = 0: symplectic");
  return rep;
}

VerificationReport check_rho_alpha_condition(const AlphaForm& alpha, const Context& ctx) {
  const int n = ctx.dim();
  VerificationReport rep{"rho_alpha", {}, {}};
  CheckRunner run;
  run.add("rho_alpha.morphism", "delta alpha = delta1 ^ alpha",
          [&] { return forms_equal(delta(alpha.form()), wedge(delta1(n), alpha.form()), ctx); });
  run.add("rho_alpha.unit_constant", "alpha(1) constant", [&] {
    cas::Verdict acc;
    for (int i = 0; i < n; ++i) {
      calc::merge_into(acc, scalars_equal(cas::diff(alpha.unit_value(), i), 0, ctx,
                                          "d alpha(1)/d" + ctx.coords()[static_cast<std::size_t>(i)]));
    }
    return acc;
  });
  run.add("rho_alpha.closed_on_fields", "d(alpha|X(M)) = 0",
          [&] { return form_is_zero(calc::exterior_d(calc::restrict_to_x(alpha.form())).form(), ctx); });
  run.run_into(rep, ctx);
  const bool direct = rep.checks[0].verdict.passed();
  const bool split = rep.checks[1].verdict.passed() && rep.checks[2].verdict.passed();
  rep.add("rho_alpha.routes_agree", "(delta alpha = delta1 ^ alpha) <=> (alpha(1) constant and d(alpha|X) = 0)",
          direct == split ? cas::Verdict{}
                          : structural_failure(std::string("internal inconsistency: direct route ") +
                                               (direct ? "passes" : "fails") + ", split route " +
                                               (split ? "passes" : "fails")));
  return rep;
}

VerificationReport check_lrj(const LrjData& d, const Context& ctx) {
  VerificationReport rep{"lrj", {}, {}};
  if (ctx.dim() % 2 == 0) {
    rep.add("lrj.dimension", "dim M odd", dimension_failure(ctx, true));
    return rep;
  }
  rep.append(check_rho_alpha_condition(d.alpha, ctx));
  rep.subject = "lrj";
  CheckRunner run;
  run.add("lrj.conformal", "delta omega = -alpha ^ omega",
          [&] { return form_is_zero(delta(d.omega) + wedge(d.alpha.form(), d.omega), ctx); });
  run.add("lrj.nondegenerate", "Pf(omega) != 0 on D(M)", [&] {
    const ScalarExpr pf = calc::pfaffian(d.omega);
    cas::Verdict v = cas::is_nonvanishing(pf, ctx.zero);
    if (!v.passed()) v.detail = "Pfaffian " + cas::to_string(pf, ctx.coords()) + ": " + v.detail;
    return v;
  });
  run.run_into(rep, ctx);
  return rep;
}

ScalarExpr volume_coefficient(const LrjData& lrj) {
  const int n = lrj.omega.dim();
  if (n % 2 == 0) throw PreconditionError("volume form needs an odd chart dimension");
  const SkewForm theta = calc::restrict_to_x(interior(DiffOp::unit(n), lrj.omega)).form();
  const SkewForm w = calc::restrict_to_x(lrj.omega).form();
  const SkewForm top = n == 1 ? theta : wedge(theta, wedge_power(w, (n - 1) / 2));
  calc::Index all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return top.component(all);
}

VerificationReport volume_check(const LrjData& lrj, const Context& ctx) {
  VerificationReport rep{"volume", {}, {}};
  if (ctx.dim() % 2 == 0) {
    rep.add("volume.dimension", "dim M = 2m+1", dimension_failure(ctx, true));
    return rep;
  }
  const ScalarExpr coeff = volume_coefficient(lrj);
  cas::Verdict v = cas::is_nonvanishing(coeff, ctx.zero);
  v.detail = "coefficient " + cas::to_string(coeff, ctx.coords()) + (v.detail.empty() ? "" : ": " + v.detail);
  rep.add("volume.top_form", "(i_1 omega)|X ^ (omega|X)^m nowhere zero", v);
  return rep;
}

VerificationReport check_exactness_identity(const LrjData& lrj, const Context& ctx) {
  VerificationReport rep{"exactness", {}, {}};
  const int n = ctx.dim();
  const SkewForm lhs = (1 + lrj.alpha.unit_value()) * lrj.omega;
  const SkewForm rhs = delta_alpha(interior(DiffOp::unit(n), lrj.omega), lrj.alpha);
  rep.add("lrj.exactness_identity", "[1 + alpha(1)] omega = delta_alpha(i_1 omega)", forms_equal(lhs, rhs, ctx));
  return rep;
}

std::string to_string(ContactKind k) { return k == ContactKind::Exact ? "exact" : "nonexact"; }

Classification classify(const LrjData& lrj, const Context& ctx) {
  const ScalarExpr u = cas::normalize(lrj.alpha.unit_value());
  if (!u.is_constant()) {
    throw PreconditionError("alpha(1) = " + cas::to_string(u, ctx.coords()) + " is not a constant");
  }
  Classification out{ContactKind::Nonexact, {"classify", {}, {}}};
  if (u.value() == -1) return out;
  out.kind = ContactKind::Exact;
  const int n = ctx.dim();
  const ScalarExpr scale = cas::normalize(1 / (1 + u));
  const SkewForm primitive = interior(DiffOp::unit(n), scale * lrj.omega);
  out.report.add("classify.exact_primitive", "omega = delta_alpha[i_1(omega / (1 + alpha(1)))]",
                 forms_equal(lrj.omega, delta_alpha(primitive, lrj.alpha), ctx));
  return out;
}

}  // namespace lrj::structures
