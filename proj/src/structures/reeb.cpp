#include "common.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/errors.hpp"
#include "lrjcalc/structures/linear.hpp"

namespace lrj::structures {

using namespace detail;
using calc::delta_alpha;
using calc::interior;

DiffOp reeb(const SkewForm& omega, const Context& ctx) {
  const int n = omega.dim();
  const ScalarExpr pf = calc::pfaffian(omega);
  if (vanishes(pf, ctx.zero)) {
    throw DegenerateError((n + 1) % 2 != 0 ? "degenerate 2-form: odd number of basis operators"
                                           : "degenerate 2-form: vanishing Pfaffian",
                          cas::to_string(pf, ctx.coords()));
  }
  const DiffOp H = solve_interior(omega, -delta1(n), ctx.zero);
  if (!cas::is_zero(H.scalar(), ctx.zero).passed()) {
    throw Error("Reeb operator has a scalar part " + cas::to_string(H.scalar(), ctx.coords()));
  }
  const ScalarExpr pairing = eval1(interior(DiffOp::unit(n), omega), H);
  if (!cas::is_zero(pairing - 1, ctx.zero).passed()) {
    throw Error("(i_1 omega)(H) = " + cas::to_string(pairing, ctx.coords()) + ", expected 1");
  }
  return H;
}

Decomposition decompose(const DiffOp& X, const SkewForm& omega, const DiffOp& H) {
  if (!X.is_vector_field()) throw PreconditionError("decompose expects a vector field");
  const ScalarExpr c = eval1(interior(DiffOp::unit(omega.dim()), omega), X);
  return {X - c * H, c};
}

std::vector<DiffOp> kernel_basis(const SkewForm& omega, const DiffOp& H, const Context& ctx) {
  return projected_basis(interior(DiffOp::unit(omega.dim()), omega), H, ctx);
}

VerificationReport check_module_isos(const SkewForm& omega, const DiffOp& H, const Context& ctx, int instances) {
  const int n = omega.dim();
  const SkewForm theta = interior(DiffOp::unit(n), omega);
  VerificationReport rep{"module_isos", {}, {}};
  CheckRunner run;
  run.add("isos.scalar_free_solution", "eta(H) = 0 => i_phi omega = eta has phi(1) = 0", [&] {
    calc::RandomSource src(n, calc::instance_seed(ctx.zero.plan.seed, 21, 0));
    cas::Verdict acc;
    for (int k = 0; k < instances; ++k) {
      SkewForm eta = src.form(1);
      eta = eta - eval1(eta, H) * theta;
      const DiffOp phi = solve_interior(omega, eta, ctx.zero);
      calc::merge_into(acc, scalars_equal(phi.scalar(), 0, ctx, "eta = " + calc::to_string(eta, ctx.coords())));
    }
    return acc;
  });
  run.add("isos.kernel_solution", "sigma(1) = sigma(H) = 0 => solution in Ker(i_1 omega|X)", [&] {
    calc::RandomSource src(n, calc::instance_seed(ctx.zero.plan.seed, 22, 0));
    cas::Verdict acc;
    for (int k = 0; k < instances; ++k) {
      SkewForm sigma = src.form(1);
      sigma.set({0}, 0);
      sigma = sigma - eval1(sigma, H) * theta;
      const DiffOp phi = solve_interior(omega, sigma, ctx.zero);
      const std::string label = "sigma = " + calc::to_string(sigma, ctx.coords());
      calc::merge_into(acc, scalars_equal(phi.scalar(), 0, ctx, label));
      calc::merge_into(acc, scalars_equal(eval1(theta, phi), 0, ctx, label));
    }
    return acc;
  });
  run.add("isos.kernel_nondegenerate", "Pf(omega on Ker(i_1 omega|X)) != 0", [&] {
    const auto basis = kernel_basis(omega, H, ctx);
    const ScalarExpr pf = pfaffian_on(omega, basis);
    cas::Verdict v = cas::is_nonvanishing(pf, ctx.zero);
    v.detail = "restricted Pfaffian " + cas::to_string(pf, ctx.coords()) + (v.detail.empty() ? "" : ": " + v.detail);
    return v;
  });
  run.run_into(rep, ctx);
  return rep;
}

namespace {

struct Ops {
  DiffOp phi;
  DiffOp X;
};

Ops solve_hamiltonian(const ScalarExpr& f, const LrjData& lrj, const DiffOp& H, const Context& ctx) {
  const int n = ctx.dim();
  const SkewForm& w = lrj.omega;
  const SkewForm daf = delta_alpha(SkewForm::scalar(n, f), lrj.alpha);
  const DiffOp phi = solve_interior(w, daf, ctx.zero);
  const ScalarExpr rho_h_f = calc::rho_alpha_apply(H, lrj.alpha, f);
  const SkewForm rhs =
      daf - rho_h_f * interior(DiffOp::unit(n), w) - (f * (1 + lrj.alpha.unit_value())) * delta1(n);
  const DiffOp X = solve_interior(w, rhs, ctx.zero);
  return {phi, X};
}

}  // namespace

HamiltonianPair hamiltonian_ops(const ScalarExpr& f, const LrjData& lrj, const DiffOp& H, const Context& ctx) {
  const int n = ctx.dim();
  const Ops ops = solve_hamiltonian(f, lrj, H, ctx);
  HamiltonianPair out{cas::normalize(f), ops.phi, ops.X, {"hamiltonian", {}, {}}};
  const SkewForm theta = interior(DiffOp::unit(n), lrj.omega);
  out.report.add("hamiltonian.phi_f", "i_phi_f omega = delta_alpha f",
                 forms_equal(interior(ops.phi, lrj.omega), delta_alpha(SkewForm::scalar(n, f), lrj.alpha), ctx));
  out.report.add("hamiltonian.X_f_vector_field", "X_f(1) = 0", scalars_equal(ops.X.scalar(), 0, ctx));
  out.report.add("hamiltonian.X_f_in_kernel", "(i_1 omega)(X_f) = 0", scalars_equal(eval1(theta, ops.X), 0, ctx));
  const DiffOp expected = DiffOp::multiplication(n, calc::rho_alpha_apply(H, lrj.alpha, f)) + ops.X -
                          (f * (1 + lrj.alpha.unit_value())) * H;
  out.report.add("hamiltonian.consistency", "phi_f = rho_alpha(H)(f) + X_f - f [1 + alpha(1)] H",
                 calc::compare_ops(ops.phi, expected, ctx.zero, ctx.coords()));
  return out;
}

BracketValue jacobi_bracket(const ScalarExpr& f, const ScalarExpr& g, const LrjData& lrj, const DiffOp& H,
                            const Context& ctx) {
  const Ops of = solve_hamiltonian(f, lrj, H, ctx);
  const Ops og = solve_hamiltonian(g, lrj, H, ctx);
  const ScalarExpr value = cas::normalize(-eval2(lrj.omega, of.phi, og.phi));
  const ScalarExpr k = 1 + lrj.alpha.unit_value();
  const ScalarExpr h_alpha_f = k * calc::rho_alpha_apply(H, lrj.alpha, f);
  const ScalarExpr h_alpha_g = k * calc::rho_alpha_apply(H, lrj.alpha, g);
  const ScalarExpr alt = -eval2(lrj.omega, of.X, og.X) - f * h_alpha_g + g * h_alpha_f;
  return {value, scalars_equal(value, alt, ctx, "{f,g} - alternative form")};
}

}  // namespace lrj::structures
