#include "doctest.h"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/calculus/compare.hpp"
#include "lrjcalc/calculus/random.hpp"
#include "lrjcalc/calculus/suites.hpp"

using namespace lrj;
using namespace lrj::calc;
using cas::ScalarExpr;

namespace {
const ScalarExpr x = ScalarExpr::variable(0);
const ScalarExpr y = ScalarExpr::variable(1);
const ScalarExpr z = ScalarExpr::variable(2);
const std::vector<std::string> xyz{"x", "y", "z"};

bool same(const ScalarExpr& a, const ScalarExpr& b) { return cas::structurally_equal(cas::normalize(a), cas::normalize(b)); }

SkewForm beta_r3() {
  SkewForm b(3, 1);
  b.set({3}, 1);
  b.set({1}, -y);
  return b;
}

DiffOp dx() { return DiffOp::partial(3, 0); }
DiffOp dy() { return DiffOp::partial(3, 1); }
DiffOp dz() { return DiffOp::partial(3, 2); }
DiffOp one() { return DiffOp::unit(3); }
}  // namespace

TEST_CASE("apply") {
  const ScalarExpr f = x * y + z;
  CHECK(same(apply(one(), f), f));
  CHECK(same(apply(dx(), x * y), y));
  const DiffOp two_plus_dx = DiffOp::multiplication(3, 2) + dx();
  CHECK(same(apply(two_plus_dx, x), 2 * x + 1));
}

TEST_CASE("bracket") {
  RandomSource src(3, 1);
  const DiffOp phi = src.diffop();
  CHECK(bracket(one(), phi).is_zero());

  const ScalarExpr f = x * x * y;
  const DiffOp mf = DiffOp::multiplication(3, f);
  CHECK(bracket(dx(), mf) == DiffOp::multiplication(3, 2 * x * y));

  const DiffOp xdy = x * dy();
  CHECK(bracket(xdy, dx()) == -dy());
  for (int t = 0; t < 5; ++t) {
    const ScalarExpr g = src.polynomial(4, 3);
    CHECK(same(apply(bracket(xdy, dx()), g), apply(xdy, apply(dx(), g)) - apply(dx(), apply(xdy, g))));
  }
}

TEST_CASE("wedge") {
  const SkewForm d1 = delta(SkewForm::scalar(3, 1));
  const SkewForm bt = lift_xform(XForm(beta_r3()));
  const SkewForm w = wedge(d1, bt);
  const DiffOp args[] = {one(), dx()};
  CHECK(same(w.evaluate(args), -y));

  CHECK(wedge(bt, SkewForm(3, 2)).is_zero());
  RandomSource src(3, 2);
  const SkewForm a = src.form(1);
  CHECK(wedge(a, a).is_zero());
}

TEST_CASE("wedge matches the expansion used for -alpha ^ omega on (1, phi, psi)") {
  RandomSource src(3, 3);
  const SkewForm alpha = src.form(1);
  const SkewForm omega = src.form(2);
  const DiffOp phi = src.diffop();
  const DiffOp psi = src.diffop();
  const DiffOp lhs_args[] = {one(), phi, psi};
  const ScalarExpr lhs = (-wedge(alpha, omega)).evaluate(lhs_args);
  const DiffOp a1[] = {one()};
  const DiffOp aphi[] = {phi};
  const DiffOp apsi[] = {psi};
  const DiffOp pp[] = {phi, psi};
  const SkewForm i1w = interior(one(), omega);
  const ScalarExpr rhs = -alpha.evaluate(a1) * omega.evaluate(pp) + alpha.evaluate(aphi) * i1w.evaluate(apsi) -
                         alpha.evaluate(apsi) * i1w.evaluate(aphi);
  CHECK(same(lhs, rhs));
}

TEST_CASE("interior") {
  RandomSource src(3, 4);
  const SkewForm eta = src.form(2);
  const DiffOp phi = src.diffop();
  CHECK(interior(phi, interior(phi, eta)).is_zero());
  CHECK(interior(phi, SkewForm::scalar(3, x)).is_zero());
  const SkewForm bt = lift_xform(XForm(beta_r3()));
  CHECK(interior(one(), bt).is_zero());
  CHECK(same(interior(dx(), bt).as_scalar(), -y));
}

TEST_CASE("delta") {
  const SkewForm d1 = delta(SkewForm::scalar(3, 1));
  CHECK(d1.components().size() == 1);
  CHECK(d1.component({0}).is_one_literal());

  const SkewForm dxf = delta(SkewForm::scalar(3, x));
  CHECK(same(dxf.component({0}), x));
  CHECK(dxf.component({1}).is_one_literal());
  CHECK(dxf.component({2}).is_zero_literal());
  CHECK(dxf.component({3}).is_zero_literal());

  RandomSource src(3, 5);
  for (int p = 0; p <= 2; ++p) CHECK(delta(delta(src.form(p))).is_zero());
}

TEST_CASE("delta_alpha and rho_alpha") {
  RandomSource src(3, 6);
  const SkewForm eta = src.form(1);
  CHECK(delta_alpha(eta, AlphaForm(3)) == delta(eta));

  const AlphaForm alpha(src.form(1));
  const ScalarExpr f = src.polynomial(3);
  const DiffOp phi = src.diffop();
  const DiffOp args[] = {phi};
  CHECK(same(delta_alpha(SkewForm::scalar(3, f), alpha).evaluate(args), apply(phi, f) + f * alpha(phi)));

  CHECK(same(rho_alpha_apply(phi, AlphaForm(3), f), apply(phi, f)));
  CHECK(same(rho_alpha_apply(one(), alpha, f), f * (1 + alpha.unit_value())));
  const AlphaForm d1(delta(SkewForm::scalar(3, 1)));
  CHECK(same(rho_alpha_apply(dx(), d1, x), 1));
}

TEST_CASE("theta") {
  RandomSource src(3, 7);
  const AlphaForm alpha = src.admissible_alpha();
  const ScalarExpr a = src.polynomial(3);
  const DiffOp phi = src.diffop();
  CHECK(same(theta(phi, alpha, SkewForm::scalar(3, a)).as_scalar(), rho_alpha_apply(phi, alpha, a)));
  CHECK(same(theta(dx(), AlphaForm(3), SkewForm::scalar(3, x * y)).as_scalar(), y));
  CHECK(same(theta(one(), AlphaForm(3), SkewForm::scalar(3, a)).as_scalar(), a));
}

TEST_CASE("exterior derivative") {
  const XForm d = exterior_d(XForm(beta_r3()));
  CHECK(d.form().components().size() == 1);
  CHECK(d.form().component({1, 2}).is_one_literal());

  RandomSource src(3, 8);
  const ScalarExpr f = src.polynomial(4, 3);
  const XForm df = restrict_to_x(delta(SkewForm::scalar(3, f)));
  CHECK(exterior_d(df).form().is_zero());

  // R4 (x1, y1, x2, y2): d(e^{-x1} w0) = -dx1 ^ e^{-x1} w0.
  const ScalarExpr x1 = ScalarExpr::variable(0);
  SkewForm w(4, 2);
  w.set({1, 2}, cas::exp(-x1));
  w.set({3, 4}, cas::exp(-x1));
  const XForm dw = exterior_d(XForm(w));
  CHECK(dw.form() == -wedge(SkewForm::covector(4, 1), w));
}

TEST_CASE("restrict and lift") {
  const SkewForm d1 = delta(SkewForm::scalar(3, 1));
  CHECK(restrict_to_x(d1).form().is_zero());
  const SkewForm bt = lift_xform(XForm(beta_r3()));
  CHECK(bt.component({0}).is_zero_literal());
  CHECK(same(bt.component({1}), -y));
  CHECK(bt.component({2}).is_zero_literal());
  CHECK(bt.component({3}).is_one_literal());
  CHECK(lift_xform(XForm(3, 1)).is_zero());
  CHECK_THROWS_AS(XForm{d1}, std::invalid_argument);
}

TEST_CASE("pfaffian") {
  SkewForm omega(3, 2);
  omega.set({0, 1}, -y);
  omega.set({0, 3}, 1);
  omega.set({1, 2}, 1);
  CHECK(pfaffian(omega).is_one_literal());
  CHECK(same(pfaffian(ScalarExpr(2) * omega), 4));

  RandomSource src(4, 9);
  CHECK(pfaffian(src.form(2)).is_zero_literal());

  // Pf^2 = det on a random 4x4 skew matrix.
  RandomSource s3(3, 10);
  const SkewForm w = s3.form(2);
  const ScalarExpr pf = pfaffian(w);
  auto a = [&](int i, int j) { return w.value_on_basis(std::vector<int>{i, j}); };
  const ScalarExpr det = pow(a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2), 2);
  CHECK(same(pf * pf, det));
}

TEST_CASE("value on unsorted tuples") {
  SkewForm w(3, 2);
  w.set({1, 2}, x);
  CHECK(same(w.value_on_basis(std::vector<int>{2, 1}), -x));
  CHECK(w.value_on_basis(std::vector<int>{1, 1}).is_zero_literal());
}

TEST_CASE("rendering") {
  CHECK(to_string(beta_r3(), xyz) == "-y*dx + dz");
  SkewForm w(3, 2);
  w.set({0, 1}, x + 1);
  w.set({2, 3}, -1);
  CHECK(to_string(w, xyz) == "(x + 1)*u^dx - dy^dz");
  CHECK(to_string(DiffOp::multiplication(3, 2) + y * dx() - dz(), xyz) == "2 + y*d/dx - d/dz");
  CHECK(to_string(SkewForm(3, 1), xyz) == "0");
}

TEST_CASE("all_indices") {
  CHECK(all_indices(3, 2).size() == 6);
  CHECK(all_indices(3, 0).size() == 1);
  CHECK(all_indices(3, 5).empty());
  CHECK(all_indices(2, 3) == std::vector<Index>{{0, 1, 2}});
}

TEST_CASE("random alphas fall on the intended side") {
  RandomSource src(3, 11);
  for (int i = 0; i < 10; ++i) {
    const AlphaForm good = src.admissible_alpha();
    CHECK(good.unit_value().is_constant());
    CHECK(exterior_d(restrict_to_x(good.form())).form().is_zero());
    const AlphaForm bad_unit = src.alpha_nonconstant_unit();
    CHECK_FALSE(bad_unit.unit_value().is_constant());
    const AlphaForm bad_closed = src.alpha_not_closed();
    CHECK_FALSE(exterior_d(restrict_to_x(bad_closed.form())).form().is_zero());
  }
}

TEST_CASE("identity suites pass on R3 and R5") {
  for (const auto& c : {standard_r3(), standard_r5()}) {
    const SuiteOptions opts{24, 3, true};
    for (const auto& rep : {cartan_suite(c, opts), algebra_suite(c, opts), operator_suite(c, opts), ce_suite(c, opts)}) {
      for (const auto& id : rep.identities) {
        INFO(rep.suite << "/" << id.identity << " on " << rep.chart << ": " << id.verdict.detail << " | " << id.inputs);
        CHECK(id.verdict.grade == cas::Grade::Exact);
        CHECK(id.instances > 0);
      }
    }
  }
}

TEST_CASE("suites are deterministic and independent of threading") {
  const auto c = standard_r3();
  const auto a = cartan_suite(c, {12, 5, true});
  const auto b = cartan_suite(c, {12, 5, false});
  REQUIRE(a.identities.size() == b.identities.size());
  for (std::size_t i = 0; i < a.identities.size(); ++i) {
    CHECK(a.identities[i].instances == b.identities[i].instances);
    CHECK(a.identities[i].verdict.grade == b.identities[i].verdict.grade);
  }
}

TEST_CASE("wrong wedge sign is caught by graded commutativity") {
  debug::set_wrong_wedge_sign(true);
  const auto rep = algebra_suite(standard_r3(), {12, 1, false});
  debug::set_wrong_wedge_sign(false);
  bool caught = false;
  for (const auto& id : rep.identities) {
    if (id.identity == "graded_commutativity") caught = !id.verdict.passed();
  }
  CHECK(caught);
}
