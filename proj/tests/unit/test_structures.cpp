#include "doctest.h"
#include "fixtures.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/errors.hpp"
#include "lrjcalc/structures/linear.hpp"

using namespace lrj;
using namespace lrj::structures;
using calc::Index;
using cas::Grade;
using cas::Rational;
using cas::ScalarExpr;

namespace {
const ScalarExpr x = ScalarExpr::variable(0);
const ScalarExpr y = ScalarExpr::variable(1);
const ScalarExpr z = ScalarExpr::variable(2);

bool same(const ScalarExpr& a, const ScalarExpr& b) { return cas::structurally_equal(cas::normalize(a), cas::normalize(b)); }

bool op_is(const DiffOp& phi, const std::vector<ScalarExpr>& comps) {
  for (int k = 0; k <= phi.dim(); ++k) {
    if (!same(phi.component(k), comps[static_cast<std::size_t>(k)])) return false;
  }
  return true;
}

Grade grade_of(const VerificationReport& r, std::string_view name) {
  const Check* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, "missing check ", name);
  return c->verdict.grade;
}

bool passed(const VerificationReport& r, std::string_view name) {
  const Check* c = r.find(name);
  REQUIRE_MESSAGE(c != nullptr, "missing check ", name);
  return c->verdict.passed();
}

LiftedContact lift_r3(int c, const ScalarExpr& g = 0) {
  return lift_contact(testing::standard_contact_r3(), Rational(c), g, testing::context_r3());
}

chart::Chart r4() { return chart::Chart("r4", {"x1", "y1", "x2", "y2"}); }

SkewForm symplectic_r4(const ScalarExpr& scale) {
  SkewForm w(4, 2);
  w.set({1, 2}, scale);
  w.set({3, 4}, scale);
  return w;
}
}  // namespace

TEST_CASE("lcs checks on R4") {
  const Context ctx = Context::make(r4());
  const ScalarExpr x1 = ScalarExpr::variable(0);

  SUBCASE("conformal exponential form") {
    const XForm alpha{SkewForm::covector(4, 1)};
    const XForm omega{symplectic_r4(cas::exp(-x1))};
    const auto rep = check_lcs({alpha, omega}, ctx);
    CHECK(rep.passed());
    CHECK(grade_of(rep, "lcs.alpha_closed") == Grade::Exact);
    CHECK(grade_of(rep, "lcs.conformal") == Grade::Exact);
    CHECK(grade_of(rep, "lcs.nondegenerate") == Grade::Probabilistic);
  }
  SUBCASE("symplectic") {
    const auto rep = check_lcs({XForm{SkewForm(4, 1)}, XForm{symplectic_r4(1)}}, ctx);
    CHECK(rep.overall() == Grade::Exact);
    REQUIRE(rep.notes.size() == 1);
    CHECK(rep.notes[0].find("symplectic") != std::string::npos);
  }
  SUBCASE("rank two") {
    SkewForm w(4, 2);
    w.set({1, 2}, 1);
    const auto rep = check_lcs({XForm{SkewForm(4, 1)}, XForm{w}}, ctx);
    CHECK_FALSE(rep.passed());
    CHECK(grade_of(rep, "lcs.nondegenerate") == Grade::Failed);
    CHECK(passed(rep, "lcs.conformal"));
  }
  SUBCASE("alpha not closed") {
    SkewForm a(4, 1);
    a.set({1}, ScalarExpr::variable(1));
    const auto rep = check_lcs({XForm{a}, XForm{symplectic_r4(1)}}, ctx);
    CHECK(grade_of(rep, "lcs.alpha_closed") == Grade::Failed);
  }
  SUBCASE("odd chart") {
    const auto rep = check_lcs({XForm{SkewForm(3, 1)}, XForm{SkewForm(3, 2)}}, testing::context_r3());
    CHECK(grade_of(rep, "lcs.dimension") == Grade::Failed);
  }
}

TEST_CASE("rho_alpha condition by both routes") {
  const Context ctx = testing::context_r3();
  SUBCASE("admissible") {
    calc::RandomSource src(3, 7);
    const auto rep = check_rho_alpha_condition(src.admissible_alpha(), ctx);
    CHECK(rep.passed());
    CHECK(passed(rep, "rho_alpha.routes_agree"));
  }
  SUBCASE("not closed on fields") {
    SkewForm a(3, 1);
    a.set({1}, y);
    const auto rep = check_rho_alpha_condition(AlphaForm(a), ctx);
    CHECK_FALSE(passed(rep, "rho_alpha.morphism"));
    CHECK_FALSE(passed(rep, "rho_alpha.closed_on_fields"));
    CHECK(passed(rep, "rho_alpha.unit_constant"));
    CHECK(passed(rep, "rho_alpha.routes_agree"));
  }
  SUBCASE("nonconstant unit value") {
    SkewForm a(3, 1);
    a.set({0}, x);
    const auto rep = check_rho_alpha_condition(AlphaForm(a), ctx);
    CHECK_FALSE(passed(rep, "rho_alpha.morphism"));
    CHECK_FALSE(passed(rep, "rho_alpha.unit_constant"));
    CHECK(passed(rep, "rho_alpha.routes_agree"));
  }
  SUBCASE("twenty random alphas agree") {
    calc::RandomSource src(3, 11);
    for (int i = 0; i < 20; ++i) {
      const AlphaForm a = i % 2 == 0 ? src.admissible_alpha()
                                     : (i % 4 == 1 ? src.alpha_not_closed() : src.alpha_nonconstant_unit());
      const auto rep = check_rho_alpha_condition(a, ctx);
      CHECK(passed(rep, "rho_alpha.routes_agree"));
      CHECK(passed(rep, "rho_alpha.morphism") == (i % 2 == 0));
    }
  }
}

TEST_CASE("contact data") {
  const Context ctx = testing::context_r3();
  auto cd = testing::standard_contact_r3();
  SUBCASE("standard") {
    const auto rep = contact_data_check(cd, ctx);
    CHECK(rep.overall() == Grade::Exact);
  }
  SUBCASE("scaled Reeb field") {
    cd.E = 2 * cd.E;
    CHECK_FALSE(passed(contact_data_check(cd, ctx), "contact.beta_on_reeb"));
  }
  SUBCASE("wrong Omega") {
    SkewForm w(3, 2);
    w.set({1, 3}, 1);
    cd.Omega = XForm{w};
    CHECK_FALSE(passed(contact_data_check(cd, ctx), "contact.reeb_in_kernel"));
  }
  SUBCASE("R5") { CHECK(contact_data_check(testing::standard_contact_r5(), testing::context_r5()).passed()); }
}

TEST_CASE("lift of standard contact R3") {
  for (int c : {-1, 0}) {
    CAPTURE(c);
    const auto lc = lift_r3(c);
    REQUIRE(lc.admissible);
    const SkewForm& W = lc.Omega_tilde;
    CHECK(same(W.component({0, 1}), -y));
    CHECK(same(W.component({0, 3}), 1));
    CHECK(same(W.component({1, 2}), 1));
    CHECK(W.components().size() == 3);
    CHECK(same(lc.alpha.form().component({0}), c));
    CHECK(lc.alpha.form().components().size() == (c == 0 ? 0U : 1U));
    for (const char* name : {"lift.unit_kills_bar", "lift.unit_contraction", "lift.reeb_contraction",
                             "lift.bar_restricts", "lift.nondegenerate", "lift.inverse_round_trip", "lift.alpha_unit",
                             "lift.alpha_reeb", "lift.rho_alpha", "lift.reeb_identity"}) {
      CAPTURE(name);
      CHECK(grade_of(lc.report, name) == Grade::Exact);
    }
  }
}

TEST_CASE("conformal closure of the lift holds only for c = 0") {
  SUBCASE("R3") {
    for (int c : {-1, 0, 2}) {
      CAPTURE(c);
      const auto lc = lift_r3(c);
      if (c == 0) {
        CHECK(lc.report.overall() == Grade::Exact);
        continue;
      }
      CHECK(grade_of(lc.report, "lift.conformal_closure") == Grade::Failed);
      CHECK(grade_of(lc.report, "lift.scaled_form") == Grade::Failed);
      CHECK(grade_of(lc.report, "lift.kernel_identity") == Grade::Failed);
      // residual delta Omega~ + alpha ^ Omega~ is c at (unit, d/dx, d/dy)
      const SkewForm residual = calc::delta(lc.Omega_tilde) + calc::wedge(lc.alpha.form(), lc.Omega_tilde);
      CHECK(same(residual.component({0, 1, 2}), c));
      CHECK(residual.components().size() == 1);
    }
  }
  SUBCASE("R5") {
    for (int c : {-1, 0, 2}) {
      CAPTURE(c);
      const auto lc = lift_contact(testing::standard_contact_r5(), Rational(c), 0, testing::context_r5());
      REQUIRE(lc.admissible);
      CHECK(passed(lc.report, "lift.conformal_closure") == (c == 0));
      CHECK(passed(lc.report, "lift.inverse_round_trip"));
    }
  }
}

TEST_CASE("inadmissible alpha(E) is rejected") {
  const auto lc = lift_r3(0, x);
  CHECK_FALSE(lc.admissible);
  const Check* c = lc.report.find("lift.admissible");
  REQUIRE(c != nullptr);
  CHECK(c->verdict.grade == Grade::Failed);
  CHECK(lc.report.find("lift.conformal_closure") == nullptr);
}

TEST_CASE("lrj checks") {
  const auto lc = lift_r3(0);
  SUBCASE("lifted standard contact") { CHECK(check_lrj(lc.lrj(), testing::context_r3()).overall() == Grade::Exact); }
  SUBCASE("Omega-bar alone is degenerate") {
    const auto rep = check_lrj({lc.alpha, lc.Omega_bar}, testing::context_r3());
    CHECK(grade_of(rep, "lrj.nondegenerate") == Grade::Failed);
  }
  SUBCASE("even chart fails fast") {
    const Context r2 = Context::make(chart::Chart("r2", {"x", "y"}));
    const auto rep = check_lrj({AlphaForm(2), SkewForm(2, 2)}, r2);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.checks[0].name == "lrj.dimension");
    CHECK(rep.checks[0].verdict.detail.find("odd") != std::string::npos);
  }
}

TEST_CASE("reeb operator") {
  const Context ctx = testing::context_r3();
  const auto lc = lift_r3(0);
  CHECK(op_is(reeb(lc.Omega_tilde, ctx), {0, 0, 0, 1}));
  CHECK(op_is(reeb(2 * lc.Omega_tilde, ctx), {0, 0, 0, Rational(1, 2)}));
  CHECK_THROWS_AS(reeb(lc.Omega_bar, ctx), DegenerateError);

  SUBCASE("uniqueness under repeated and permuted solves") {
    const auto c = testing::standard_contact_r5();
    const auto l5 = lift_contact(c, Rational(0), 0, testing::context_r5());
    const DiffOp h1 = reeb(l5.Omega_tilde, testing::context_r5());
    CHECK(h1 == reeb(l5.Omega_tilde, testing::context_r5()));
    // relabel coordinates by reversing (x1, y1, x2, y2, z) and solve again
    const std::vector<int> perm{4, 3, 2, 1, 0};
    SkewForm permuted(5, 2);
    std::vector<ScalarExpr> sub(5);
    for (int i = 0; i < 5; ++i) sub[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = ScalarExpr::variable(i);
    auto map_index = [&](int k) { return k == 0 ? 0 : perm[static_cast<std::size_t>(k - 1)] + 1; };
    for (const auto& [idx, v] : l5.Omega_tilde.components()) {
      Index j{map_index(idx[0]), map_index(idx[1])};
      ScalarExpr val = cas::substitute(v, sub);
      if (j[0] > j[1]) {
        std::swap(j[0], j[1]);
        val = -val;
      }
      permuted.set(j, val);
    }
    const DiffOp h2 = reeb(permuted, testing::context_r5());
    for (int k = 0; k <= 5; ++k) {
      CHECK(same(cas::substitute(h1.component(k), sub), h2.component(map_index(k))));
    }
  }
}

TEST_CASE("decompose and kernel basis") {
  const Context ctx = testing::context_r3();
  const auto lc = lift_r3(0);
  const DiffOp H = reeb(lc.Omega_tilde, ctx);
  const auto dH = decompose(H, lc.Omega_tilde, H);
  CHECK(dH.kernel_part.is_zero());
  CHECK(same(dH.coefficient, 1));
  const auto dy = decompose(DiffOp::partial(3, 1), lc.Omega_tilde, H);
  CHECK(dy.kernel_part == DiffOp::partial(3, 1));
  CHECK(same(dy.coefficient, 0));
  const auto dz = decompose(DiffOp::partial(3, 2), lc.Omega_tilde, H);
  CHECK(dz.kernel_part.is_zero());
  CHECK(same(dz.coefficient, 1));
  CHECK_THROWS_AS(decompose(DiffOp::unit(3), lc.Omega_tilde, H), PreconditionError);

  const auto basis = kernel_basis(lc.Omega_tilde, H, ctx);
  REQUIRE(basis.size() == 2);
  CHECK(op_is(basis[0], {0, 1, 0, y}));
  CHECK(op_is(basis[1], {0, 0, 1, 0}));
  CHECK(same(lc.Omega_tilde.evaluate(basis), 1));

  CHECK(check_module_isos(lc.Omega_tilde, H, ctx).overall() == Grade::Exact);
}

TEST_CASE("hamiltonian operators") {
  const Context ctx = testing::context_r3();
  SUBCASE("c = -1") {
    const auto lc = lift_r3(-1);
    const DiffOp H = reeb(lc.Omega_tilde, ctx);
    const auto h0 = hamiltonian_ops(0, lc.lrj(), H, ctx);
    CHECK(h0.phi_f.is_zero());
    CHECK(h0.X_f.is_zero());
    const auto h1 = hamiltonian_ops(1, lc.lrj(), H, ctx);
    CHECK(h1.phi_f.is_zero());
    const auto hz = hamiltonian_ops(z, lc.lrj(), H, ctx);
    CHECK(op_is(hz.phi_f, {1, 0, -y, 0}));
    CHECK(hz.report.passed());
  }
  SUBCASE("c = 0") {
    const auto lc = lift_r3(0);
    const DiffOp H = reeb(lc.Omega_tilde, ctx);
    const auto hz = hamiltonian_ops(z, lc.lrj(), H, ctx);
    CHECK(op_is(hz.phi_f, {1, 0, -y, -z}));
    CHECK(hz.report.overall() == Grade::Exact);
    CHECK(hz.X_f.is_vector_field());
  }
}

TEST_CASE("jacobi bracket") {
  const Context ctx = testing::context_r3();
  SUBCASE("frozen values") {
    const auto lm = lift_r3(-1);
    const DiffOp Hm = reeb(lm.Omega_tilde, ctx);
    CHECK(same(jacobi_bracket(x, z, lm.lrj(), Hm, ctx).value, 0));
    CHECK(same(jacobi_bracket(x, y, lm.lrj(), Hm, ctx).value, -1));
    const auto l0 = lift_r3(0);
    const DiffOp H0 = reeb(l0.Omega_tilde, ctx);
    const auto xz = jacobi_bracket(x, z, l0.lrj(), H0, ctx);
    CHECK(same(xz.value, -x));
    CHECK(xz.alternative_form.passed());
  }
  SUBCASE("axioms on polynomials") {
    const auto lc = lift_r3(0);
    const LrjData d = lc.lrj();
    const DiffOp H = reeb(lc.Omega_tilde, ctx);
    calc::RandomSource src(3, 5);
    auto br = [&](const ScalarExpr& f, const ScalarExpr& g) { return jacobi_bracket(f, g, d, H, ctx).value; };
    for (int t = 0; t < 3; ++t) {
      const ScalarExpr f = src.polynomial(3, 2);
      const ScalarExpr g = src.polynomial(3, 2);
      const ScalarExpr h = src.polynomial(3, 2);
      CHECK(same(br(f, f), 0));
      CHECK(same(br(f, g) + br(g, f), 0));
      CHECK(same(br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)), 0));
      CHECK(same(br(f * h, g) - f * br(h, g) - h * br(f, g) + f * h * br(1, g), 0));
      CHECK(jacobi_bracket(f, g, d, H, ctx).alternative_form.grade == Grade::Exact);
    }
  }
}

TEST_CASE("volume criterion") {
  const auto l3 = lift_r3(0);
  const ScalarExpr v3 = cas::normalize(volume_coefficient(l3.lrj()));
  CHECK((same(v3, 1) || same(v3, -1)));
  CHECK(volume_check(l3.lrj(), testing::context_r3()).overall() == Grade::Exact);
  const auto l5 = lift_contact(testing::standard_contact_r5(), Rational(0), 0, testing::context_r5());
  const ScalarExpr v5 = cas::normalize(volume_coefficient(l5.lrj()));
  CHECK(same(v5, 2));

  SkewForm deficient = l3.Omega_tilde;
  deficient.set({1, 2}, 0);
  CHECK_FALSE(volume_check({l3.alpha, deficient}, testing::context_r3()).passed());
  CHECK_THROWS_AS(volume_coefficient({AlphaForm(2), SkewForm(2, 2)}), PreconditionError);
}

TEST_CASE("exactness identity") {
  const Context ctx = testing::context_r3();
  CHECK(check_exactness_identity(lift_r3(0).lrj(), ctx).overall() == Grade::Exact);
  // for c = -1 the left side vanishes but delta_alpha(beta~) = Omega-bar
  const auto lm = lift_r3(-1);
  CHECK(check_exactness_identity(lm.lrj(), ctx).overall() == Grade::Failed);
  const auto l0 = lift_r3(0);
  SkewForm perturbed = l0.Omega_tilde + x * calc::wedge(SkewForm::covector(3, 1), SkewForm::covector(3, 2));
  const auto rep = check_exactness_identity({l0.alpha, perturbed}, ctx);
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].verdict.grade == Grade::Failed);
  CHECK(rep.checks[0].verdict.point.size() == 3);
}

TEST_CASE("classification") {
  const Context ctx = testing::context_r3();
  const auto l0 = classify(lift_r3(0).lrj(), ctx);
  CHECK(l0.kind == ContactKind::Exact);
  CHECK(l0.report.overall() == Grade::Exact);
  CHECK(classify(lift_r3(-1).lrj(), ctx).kind == ContactKind::Nonexact);
  const auto half = lift_contact(testing::standard_contact_r3(), Rational(-1, 2), 0, ctx);
  CHECK(classify(half.lrj(), ctx).kind == ContactKind::Exact);
  CHECK(to_string(ContactKind::Nonexact) == "nonexact");

  for (int k : {2, -3}) {
    const auto lc = lift_r3(-1);
    CHECK(classify({lc.alpha, k * lc.Omega_tilde}, ctx).kind == ContactKind::Nonexact);
    CHECK(classify({l0.kind == ContactKind::Exact ? lift_r3(0).alpha : lc.alpha, k * lift_r3(0).Omega_tilde}, ctx).kind ==
          ContactKind::Exact);
  }
  SkewForm a(3, 1);
  a.set({0}, x);
  CHECK_THROWS_AS(classify({AlphaForm(a), lift_r3(0).Omega_tilde}, ctx), PreconditionError);
}

TEST_CASE("linear solver") {
  const cas::ZeroTest zt = cas::ZeroTest::on(calc::standard_r3(), {});
  const auto sol = solve_linear({x, 1, 1, 0}, {x + 1, 1}, 2, 2, zt);
  CHECK(same(sol[0], 1));
  CHECK(same(sol[1], 1));
  CHECK_THROWS_AS(solve_linear({x, y, 2 * x, 2 * y}, {1, 2}, 2, 2, zt), DegenerateError);
  CHECK_THROWS_AS(solve_linear({1, 1, 2}, {1, 1, 3}, 3, 1, zt), DegenerateError);
  const auto rect = solve_linear({1, 2, x}, {y, 2 * y, x * y}, 3, 1, zt);
  CHECK(same(rect[0], y));
}

TEST_CASE("reports are independent of threading") {
  auto serial = testing::context_r3(3);
  serial.parallel = false;
  const auto a = lift_contact(testing::standard_contact_r3(), Rational(2), 0, serial);
  const auto b = lift_contact(testing::standard_contact_r3(), Rational(2), 0, testing::context_r3(3));
  REQUIRE(a.report.checks.size() == b.report.checks.size());
  for (std::size_t i = 0; i < a.report.checks.size(); ++i) {
    CHECK(a.report.checks[i].name == b.report.checks[i].name);
    CHECK(a.report.checks[i].verdict.grade == b.report.checks[i].verdict.grade);
    CHECK(a.report.checks[i].verdict.detail == b.report.checks[i].verdict.detail);
  }
}
