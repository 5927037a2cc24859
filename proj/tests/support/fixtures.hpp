#pragma once

// Standard contact data shared by the unit and acceptance tests.

#include "lrjcalc/calculus/cartan.hpp"
#include "lrjcalc/calculus/suites.hpp"
#include "lrjcalc/structures/structures.hpp"

namespace lrj::testing {

/// beta = dz - y dx on (x, y, z), Omega = d beta, E = d/dz.
inline structures::ContactData standard_contact_r3() {
  const auto y = cas::ScalarExpr::variable(1);
  calc::SkewForm b(3, 1);
  b.set({1}, -y);
  b.set({3}, 1);
  const calc::XForm beta{b};
  return {beta, calc::exterior_d(beta), calc::DiffOp::partial(3, 2)};
}

/// beta = dz - y1 dx1 - y2 dx2 on (x1, y1, x2, y2, z), Omega = d beta, E = d/dz.
inline structures::ContactData standard_contact_r5() {
  calc::SkewForm b(5, 1);
  b.set({1}, -cas::ScalarExpr::variable(1));
  b.set({3}, -cas::ScalarExpr::variable(3));
  b.set({5}, 1);
  const calc::XForm beta{b};
  return {beta, calc::exterior_d(beta), calc::DiffOp::partial(5, 4)};
}

inline structures::Context context_r3(std::uint64_t seed = 0) {
  chart::SamplePlan plan;
  plan.seed = seed;
  return structures::Context::make(calc::standard_r3(), plan);
}

inline structures::Context context_r5(std::uint64_t seed = 0) {
  chart::SamplePlan plan;
  plan.seed = seed;
  return structures::Context::make(calc::standard_r5(), plan);
}

}  // namespace lrj::testing
