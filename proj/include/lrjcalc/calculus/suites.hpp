#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrjcalc/cas/zero.hpp"
#include "lrjcalc/chart/chart.hpp"

namespace lrj::calc {

/// Aggregate over all randomized instances of one identity.
struct IdentityOutcome {
  std::string identity;
  std::string formula;
  int instances = 0;
  cas::Verdict verdict;
  std::string inputs;  // rendering of the first failing instance
};

struct SuiteReport {
  std::string suite;
  std::string chart;
  std::vector<IdentityOutcome> identities;
  bool passed() const;
  cas::Grade grade() const;
};

struct SuiteOptions {
  int instances = 100;
  std::uint64_t seed = 0;
  bool parallel = true;  // run instances on OpenMP threads
};

/// theta/interior/delta_alpha identities on random polynomial inputs, with
/// alpha = 0 on even instances and a random admissible alpha on odd ones.
/// Form degrees cycle through 0..3.
SuiteReport cartan_suite(const chart::Chart& c, const SuiteOptions& opts);

/// delta^2 = 0, delta_alpha^2 = 0 (admissible alpha), interior as a
/// derivation, wedge associativity and graded commutativity, d^2 = 0 and
/// agreement of d with delta off the unit.
SuiteReport algebra_suite(const chart::Chart& c, const SuiteOptions& opts);

/// Operator-level checks: bracket against the commutator of apply, and the
/// defect [rho_a(phi), rho_a(psi)] - rho_a[phi, psi] = f (delta a - delta1 ^ a)(phi, psi)
/// for arbitrary alpha, each tested on 5 random functions.
SuiteReport operator_suite(const chart::Chart& c, const SuiteOptions& opts);

/// The full Chevalley-Eilenberg sum for rho_alpha against delta + alpha ^
/// on random operators, forms of degree 0..2 and admissible alpha.
SuiteReport ce_suite(const chart::Chart& c, const SuiteOptions& opts);

/// Standard charts used by the self-test.
chart::Chart standard_r3();
chart::Chart standard_r5();

/// Instance seed for (suite seed, salt, instance index).
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t salt, std::size_t i);

}  // namespace lrj::calc
