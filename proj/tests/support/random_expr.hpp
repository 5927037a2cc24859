#pragma once

#include <random>
#include <vector>

#include "lrjcalc/cas/expr.hpp"

namespace lrj::testing {

// Random expression trees for property tests.  Polynomial mode draws only
// small integer coefficients, sums, products and powers, so identities on
// them must grade Exact.
class ExprGen {
 public:
  ExprGen(int dim, std::uint64_t seed, bool polynomial = true) : dim_(dim), rng_(seed), polynomial_(polynomial) {}

  cas::ScalarExpr scalar(int depth = 3) {
    if (depth <= 0 || pick(4) == 0) return leaf();
    const int choices = polynomial_ ? 3 : 6;
    switch (pick(choices)) {
      case 0: return scalar(depth - 1) + scalar(depth - 1);
      case 1: return scalar(depth - 1) * scalar(depth - 1);
      case 2: return cas::pow(scalar(depth - 1), 1 + pick(2));
      case 3: return cas::sin(scalar(depth - 1));
      case 4: return cas::cos(scalar(depth - 1));
      default: return cas::exp(leaf());
    }
  }

  cas::ScalarExpr leaf() {
    if (pick(2) == 0) return cas::ScalarExpr(static_cast<long>(pick(7)) - 3);
    return cas::ScalarExpr::variable(pick(dim_));
  }

  int pick(int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng_)); }
  std::mt19937_64& rng() { return rng_; }

 private:
  int dim_;
  std::mt19937_64 rng_;
  bool polynomial_;
};

}  // namespace lrj::testing
