#pragma once

#include <cstdint>
#include <random>

#include "lrjcalc/calculus/form.hpp"

namespace lrj::calc {

/// Seeded generator of small polynomial inputs for the identity suites.
/// Coefficients are integers in [-3, 3]; monomials have total degree <= 2.
class RandomSource {
 public:
  RandomSource(int n, std::uint64_t seed) : n_(n), rng_(seed) {}

  int dim() const { return n_; }
  int pick(int count);  // uniform in [0, count)
  bool coin() { return pick(2) == 1; }

  ScalarExpr polynomial(int terms = 3, int max_degree = 2);
  DiffOp diffop();
  DiffOp vector_field();
  /// Each increasing tuple is populated with probability 1/2.
  SkewForm form(int degree);
  XForm xform(int degree);

  /// alpha = c*delta1 + lift(df): constant unit value, closed on vector fields.
  AlphaForm admissible_alpha();
  /// Closed vector-field part but a nonconstant unit value.
  AlphaForm alpha_nonconstant_unit();
  /// Constant unit value but a vector-field part that is not closed.
  AlphaForm alpha_not_closed();

 private:
  int n_;
  std::mt19937_64 rng_;
};

}  // namespace lrj::calc
