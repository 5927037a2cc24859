#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrjcalc/cas/expr.hpp"
#include "lrjcalc/chart/chart.hpp"

namespace lrj::cas {

inline constexpr double kDefaultTolerance = 1e-9;

/// Outcome of a zero test.  NonZero always carries a sample point inside the
/// box and the value found there.
struct ZeroGrade {
  enum class Kind { Exact, Probabilistic, NonZero, Indeterminate };
  Kind kind = Kind::Exact;
  int samples = 0;
  double tolerance = 0.0;
  std::vector<double> witness;
  double value = 0.0;

  bool passed() const { return kind == Kind::Exact || kind == Kind::Probabilistic; }
};

std::string to_string(ZeroGrade::Kind k);

/// Graded verdict shared by every structure-level check.  The order of the
/// enumerators is strength: combining verdicts keeps the larger one.
enum class Grade { Exact = 0, Probabilistic = 1, Indeterminate = 2, Failed = 3 };
std::string to_string(Grade g);
inline Grade weakest(Grade a, Grade b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

struct Verdict {
  Grade grade = Grade::Exact;
  int samples = 0;
  double tolerance = 0.0;
  std::vector<double> point;  // empty unless a sample point is the witness
  double value = 0.0;
  std::string detail;

  bool passed() const { return grade == Grade::Exact || grade == Grade::Probabilistic; }
};

Verdict to_verdict(const ZeroGrade& z);

/// Options for one zero test.  `box` empty means [-1, 1] on every axis the
/// expression mentions.
struct ZeroTest {
  chart::SamplePlan plan;
  double tolerance = kDefaultTolerance;
  std::vector<chart::Interval> box;
  static ZeroTest on(const chart::Chart& c, const chart::SamplePlan& plan, double tol = kDefaultTolerance) {
    return {plan, tol, c.domain()};
  }
};

/// Exact when the normalized form is literally 0.  A nonzero normal form
/// without transcendental atoms is a nonzero rational function and yields
/// NonZero at the first sample where it does not vanish.  Otherwise the
/// normal form is sampled: Probabilistic when every |value| is at most
/// tol * (1 + scale), NonZero at the first sample that is not.  A sample
/// with a zero denominator is redrawn up to 8 times before the test gives
/// up with Indeterminate.
ZeroGrade is_zero(const ScalarExpr& e, const ZeroTest& opts);
ZeroGrade is_zero(const ScalarExpr& e, int samples = chart::kDefaultSamples, double tol = kDefaultTolerance,
                  std::uint64_t seed = 0);

/// Exact for a nonzero constant normal form; Failed for the zero form or a
/// sample with |value| <= tol * (1 + scale); otherwise Probabilistic.
Verdict is_nonvanishing(const ScalarExpr& e, const ZeroTest& opts);

}  // namespace lrj::cas
