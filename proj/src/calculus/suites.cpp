#include "lrjcalc/calculus/suites.hpp"

#include <functional>

#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/calculus/compare.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/kernels/batch_eval.hpp"

namespace lrj::calc {

namespace {

struct Spec {
  const char* name;
  const char* formula;
};

// One instance yields a verdict per identity (nullopt when the identity
// does not apply to this instance) plus a rendering of its inputs.
struct InstanceResult {
  std::vector<std::optional<cas::Verdict>> verdicts;
  std::string inputs;
};

using InstanceFn = std::function<InstanceResult(std::size_t, RandomSource&, const cas::ZeroTest&)>;

SuiteReport run(const std::string& suite, const chart::Chart& c, const SuiteOptions& opts, std::uint64_t salt,
                const std::vector<Spec>& specs, const InstanceFn& fn) {
  std::vector<InstanceResult> results(static_cast<std::size_t>(opts.instances));
  kernels::for_each_index(
      results.size(),
      [&](std::size_t i) {
        const std::uint64_t s = instance_seed(opts.seed, salt, i);
        RandomSource src(c.dim(), s);
        const cas::ZeroTest zt = cas::ZeroTest::on(c, {chart::kDefaultSamples, s, chart::kDefaultMargin});
        results[i] = fn(i, src, zt);
      },
      opts.parallel);

  SuiteReport rep{suite, c.name(), {}};
  for (std::size_t k = 0; k < specs.size(); ++k) {
    IdentityOutcome out{specs[k].name, specs[k].formula, 0, {}, {}};
    for (const auto& r : results) {
      if (!r.verdicts[k]) continue;
      ++out.instances;
      const bool first_failure = out.verdict.passed() && !r.verdicts[k]->passed();
      merge_into(out.verdict, *r.verdicts[k]);
      if (first_failure) out.inputs = r.inputs;
    }
    rep.identities.push_back(std::move(out));
  }
  return rep;
}

std::string describe(const std::vector<std::pair<std::string, std::string>>& parts) {
  std::string s;
  for (const auto& [k, v] : parts) {
    if (!s.empty()) s += "; ";
    s += k + " = " + v;
  }
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& i : identities) {
    if (!i.verdict.passed()) return false;
  }
  return true;
}

cas::Grade SuiteReport::grade() const {
  cas::Grade g = cas::Grade::Exact;
  for (const auto& i : identities) g = cas::weakest(g, i.verdict.grade);
  return g;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t salt, std::size_t i) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1) + 0xbf58476d1ce4e5b9ULL * (i + 1);
  z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31U);
}

chart::Chart standard_r3() { return chart::Chart("R3", {"x", "y", "z"}); }
chart::Chart standard_r5() { return chart::Chart("R5", {"x1", "y1", "x2", "y2", "z"}); }

SuiteReport cartan_suite(const chart::Chart& c, const SuiteOptions& opts) {
  static const std::vector<Spec> specs = {
      {"theta_interior_commutator", "[theta_phi, i_psi] = i_[phi,psi]"},
      {"theta_commutes_with_delta", "theta_phi delta_a = delta_a theta_phi"},
      {"theta_bracket", "[theta_phi, theta_psi] = theta_[phi,psi]"},
      {"theta_on_functions", "theta_phi a = rho_a(phi)(a)"},
  };
  const auto& names = c.coords();
  return run("cartan", c, opts, 1, specs, [&](std::size_t i, RandomSource& src, const cas::ZeroTest& zt) {
    const DiffOp phi = src.diffop();
    const DiffOp psi = src.diffop();
    const AlphaForm alpha = i % 2 == 0 ? AlphaForm(c.dim()) : src.admissible_alpha();
    const SkewForm eta = src.form(static_cast<int>((i / 2) % 4));
    const ScalarExpr a = src.polynomial(3);
    InstanceResult r;
    const DiffOp br = bracket(phi, psi);

    const SkewForm lhs1 = theta(phi, alpha, interior(psi, eta)) - interior(psi, theta(phi, alpha, eta));
    r.verdicts.emplace_back(compare_forms(lhs1, interior(br, eta), zt, names));

    const SkewForm lhs2 = theta(phi, alpha, delta_alpha(eta, alpha));
    r.verdicts.emplace_back(compare_forms(lhs2, delta_alpha(theta(phi, alpha, eta), alpha), zt, names));

    const SkewForm lhs3 = theta(phi, alpha, theta(psi, alpha, eta)) - theta(psi, alpha, theta(phi, alpha, eta));
    r.verdicts.emplace_back(compare_forms(lhs3, theta(br, alpha, eta), zt, names));

    const SkewForm fa = SkewForm::scalar(c.dim(), a);
    r.verdicts.emplace_back(
        compare_scalars(theta(phi, alpha, fa).as_scalar(), rho_alpha_apply(phi, alpha, a), zt, names));

    r.inputs = describe({{"phi", to_string(phi, names)},
                         {"psi", to_string(psi, names)},
                         {"alpha", to_string(alpha.form(), names)},
                         {"eta", to_string(eta, names)},
                         {"a", cas::to_string(a, names)}});
    return r;
  });
}

SuiteReport algebra_suite(const chart::Chart& c, const SuiteOptions& opts) {
  static const std::vector<Spec> specs = {
      {"delta_squared", "delta delta eta = 0"},
      {"delta_alpha_squared", "delta_a delta_a eta = 0 when delta a = delta1 ^ a"},
      {"interior_derivation", "i_phi(eta ^ zeta) = (i_phi eta) ^ zeta + (-1)^p eta ^ i_phi zeta"},
      {"interior_twice", "i_phi i_phi eta = 0"},
      {"wedge_associative", "(eta ^ zeta) ^ xi = eta ^ (zeta ^ xi)"},
      {"graded_commutativity", "eta ^ zeta = (-1)^(pq) zeta ^ eta"},
      {"exterior_d_squared", "d d beta = 0"},
      {"exterior_d_matches_delta", "d beta = delta(beta~) off the unit"},
  };
  const auto& names = c.coords();
  return run("algebra", c, opts, 2, specs, [&](std::size_t i, RandomSource& src, const cas::ZeroTest& zt) {
    const int n = c.dim();
    const int p = static_cast<int>(i % 4);
    const int q = 1 + static_cast<int>((i / 3) % 2);
    const SkewForm eta = src.form(p);
    const SkewForm zeta = src.form(q);
    const SkewForm xi = src.form(1);
    const DiffOp phi = src.diffop();
    const AlphaForm alpha = src.admissible_alpha();
    const XForm beta = src.xform(1 + static_cast<int>(i % 2));
    InstanceResult r;

    r.verdicts.emplace_back(compare_forms(delta(delta(eta)), SkewForm(n, p + 2), zt, names));
    r.verdicts.emplace_back(
        compare_forms(delta_alpha(delta_alpha(eta, alpha), alpha), SkewForm(n, p + 2), zt, names));

    const SkewForm sign_term = p % 2 == 0 ? wedge(eta, interior(phi, zeta)) : -wedge(eta, interior(phi, zeta));
    // For p = 0 the first term has no degree -1 factor and drops out.
    const SkewForm leibniz = p == 0 ? sign_term : wedge(interior(phi, eta), zeta) + sign_term;
    r.verdicts.emplace_back(compare_forms(interior(phi, wedge(eta, zeta)), leibniz, zt, names));
    r.verdicts.emplace_back(p >= 2 ? std::optional(compare_forms(interior(phi, interior(phi, eta)),
                                                                 SkewForm(n, p - 2), zt, names))
                                   : std::nullopt);

    r.verdicts.emplace_back(compare_forms(wedge(wedge(eta, zeta), xi), wedge(eta, wedge(zeta, xi)), zt, names));
    const SkewForm swapped = (p * q) % 2 == 0 ? wedge(zeta, eta) : -wedge(zeta, eta);
    r.verdicts.emplace_back(compare_forms(wedge(eta, zeta), swapped, zt, names));

    const XForm dbeta = exterior_d(beta);
    r.verdicts.emplace_back(compare_forms(exterior_d(dbeta).form(), SkewForm(n, beta.degree() + 2), zt, names));
    r.verdicts.emplace_back(
        compare_forms(dbeta.form(), restrict_to_x(delta(lift_xform(beta))).form(), zt, names));

    r.inputs = describe({{"eta", to_string(eta, names)},
                         {"zeta", to_string(zeta, names)},
                         {"xi", to_string(xi, names)},
                         {"phi", to_string(phi, names)},
                         {"alpha", to_string(alpha.form(), names)},
                         {"beta", to_string(beta.form(), names)}});
    return r;
  });
}

SuiteReport operator_suite(const chart::Chart& c, const SuiteOptions& opts) {
  static const std::vector<Spec> specs = {
      {"bracket_is_commutator", "[phi,psi](f) = phi(psi(f)) - psi(phi(f))"},
      {"rho_alpha_bracket_defect",
       "[rho_a(phi), rho_a(psi)](f) - rho_a([phi,psi])(f) = f (delta a - delta1 ^ a)(phi, psi)"},
  };
  const auto& names = c.coords();
  return run("operators", c, opts, 3, specs, [&](std::size_t i, RandomSource& src, const cas::ZeroTest& zt) {
    const int n = c.dim();
    const DiffOp phi = src.diffop();
    const DiffOp psi = src.diffop();
    AlphaForm alpha(n);
    switch (i % 3) {
      case 0: alpha = src.admissible_alpha(); break;
      case 1: alpha = src.alpha_nonconstant_unit(); break;
      default: alpha = src.alpha_not_closed(); break;
    }
    const DiffOp br = bracket(phi, psi);
    const DiffOp rphi = phi + DiffOp::multiplication(n, alpha(phi));
    const DiffOp rpsi = psi + DiffOp::multiplication(n, alpha(psi));
    const DiffOp defect = bracket(rphi, rpsi) - (br + DiffOp::multiplication(n, alpha(br)));
    const SkewForm curvature = delta(alpha.form()) - wedge(SkewForm::covector(n, 0), alpha.form());
    const DiffOp args[] = {phi, psi};
    const ScalarExpr k = curvature.evaluate(args);

    cas::Verdict comm;
    cas::Verdict prop2;
    for (int t = 0; t < 5; ++t) {
      const ScalarExpr f = src.polynomial(3, 3);
      merge_into(comm, compare_scalars(apply(br, f), apply(phi, apply(psi, f)) - apply(psi, apply(phi, f)), zt,
                                       names, "f = " + cas::to_string(f, names)));
      merge_into(prop2, compare_scalars(apply(defect, f), f * k, zt, names, "f = " + cas::to_string(f, names)));
    }
    InstanceResult r;
    r.verdicts.emplace_back(comm);
    r.verdicts.emplace_back(prop2);
    r.inputs = describe({{"phi", to_string(phi, names)},
                         {"psi", to_string(psi, names)},
                         {"alpha", to_string(alpha.form(), names)}});
    return r;
  });
}

SuiteReport ce_suite(const chart::Chart& c, const SuiteOptions& opts) {
  static const std::vector<Spec> specs = {
      {"ce_sum_matches_delta_alpha", "CE sum for rho_a = delta eta + a ^ eta"},
  };
  const auto& names = c.coords();
  return run("chevalley_eilenberg", c, opts, 4, specs, [&](std::size_t i, RandomSource& src, const cas::ZeroTest& zt) {
    const int p = static_cast<int>(i % 3);
    const SkewForm eta = src.form(p);
    const AlphaForm alpha = src.admissible_alpha();
    std::vector<DiffOp> ops;
    for (int k = 0; k <= p; ++k) ops.push_back(src.diffop());
    InstanceResult r;
    r.verdicts.emplace_back(
        compare_scalars(ce_coboundary(eta, alpha, ops), delta_alpha(eta, alpha).evaluate(ops), zt, names));
    std::string op_text;
    for (const auto& o : ops) op_text += (op_text.empty() ? "" : ", ") + to_string(o, names);
    r.inputs = describe({{"eta", to_string(eta, names)}, {"alpha", to_string(alpha.form(), names)}, {"ops", op_text}});
    return r;
  });
}

}  // namespace lrj::calc
