#include "lrjcalc/cas/zero.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "lrjcalc/cas/eval.hpp"
#include "lrjcalc/cas/normalize.hpp"

namespace lrj::cas {

namespace {

constexpr int kRedraws = 8;

std::vector<chart::Interval> sample_box(const ScalarExpr& e, const ZeroTest& opts) {
  if (!opts.box.empty()) return opts.box;
  const int dim = std::max(1, max_variable(e) + 1);
  return std::vector<chart::Interval>(static_cast<std::size_t>(dim));
}

// Draws points until one evaluates; nullopt after kRedraws failures.
struct Sample {
  std::vector<double> point;
  ScaledValue v;
};

std::optional<Sample> draw(chart::PointSampler& s, const EvalTape& tape) {
  for (int attempt = 0; attempt <= kRedraws; ++attempt) {
    Sample out{s.next(), {}};
    out.v = tape.evaluate(out.point);
    if (out.v.ok && std::isfinite(out.v.value)) return out;
  }
  return std::nullopt;
}

bool negligible(const ScaledValue& v, double tol) { return std::abs(v.value) <= tol * (1.0 + v.scale); }

}  // namespace

std::string to_string(ZeroGrade::Kind k) {
  switch (k) {
    case ZeroGrade::Kind::Exact: return "exact";
    case ZeroGrade::Kind::Probabilistic: return "probabilistic";
    case ZeroGrade::Kind::NonZero: return "nonzero";
    case ZeroGrade::Kind::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::string to_string(Grade g) {
  switch (g) {
    case Grade::Exact: return "exact";
    case Grade::Probabilistic: return "probabilistic";
    case Grade::Indeterminate: return "indeterminate";
    case Grade::Failed: return "failed";
  }
  return "?";
}

Verdict to_verdict(const ZeroGrade& z) {
  Verdict v;
  v.samples = z.samples;
  v.tolerance = z.tolerance;
  v.point = z.witness;
  v.value = z.value;
  switch (z.kind) {
    case ZeroGrade::Kind::Exact: v.grade = Grade::Exact; break;
    case ZeroGrade::Kind::Probabilistic: v.grade = Grade::Probabilistic; break;
    case ZeroGrade::Kind::NonZero: v.grade = Grade::Failed; break;
    case ZeroGrade::Kind::Indeterminate: v.grade = Grade::Indeterminate; break;
  }
  return v;
}

ZeroGrade is_zero(const ScalarExpr& e, const ZeroTest& opts) {
  chart::validate(opts.plan);
  if (!(opts.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  const ScalarExpr n = normalize(e);
  ZeroGrade out;
  out.tolerance = opts.tolerance;
  if (n.is_zero_literal()) return out;

  const bool rational = !has_transcendental(n);
  const auto box = sample_box(n, opts);
  chart::PointSampler sampler(box, opts.plan.seed, opts.plan.margin);
  const EvalTape tape(n);
  for (int i = 0; i < opts.plan.count; ++i) {
    auto s = draw(sampler, tape);
    if (!s) {
      out.kind = ZeroGrade::Kind::Indeterminate;
      out.samples = i;
      return out;
    }
    const bool hit = rational ? s->v.value != 0.0 : !negligible(s->v, opts.tolerance);
    if (hit) {
      out.kind = ZeroGrade::Kind::NonZero;
      out.samples = i + 1;
      out.witness = std::move(s->point);
      out.value = s->v.value;
      return out;
    }
  }
  // A nonzero rational function that vanished at every sample is left
  // undecided rather than called zero.
  out.kind = rational ? ZeroGrade::Kind::Indeterminate : ZeroGrade::Kind::Probabilistic;
  out.samples = opts.plan.count;
  return out;
}

ZeroGrade is_zero(const ScalarExpr& e, int samples, double tol, std::uint64_t seed) {
  ZeroTest opts;
  opts.plan.count = samples;
  opts.plan.seed = seed;
  opts.tolerance = tol;
  return is_zero(e, opts);
}

Verdict is_nonvanishing(const ScalarExpr& e, const ZeroTest& opts) {
  chart::validate(opts.plan);
  const ScalarExpr n = normalize(e);
  Verdict out;
  out.tolerance = opts.tolerance;
  if (n.is_zero_literal()) {
    out.grade = Grade::Failed;
    out.detail = "identically zero";
    // any point of the box is a witness
    if (!opts.box.empty()) {
      chart::PointSampler sampler(opts.box, opts.plan.seed, opts.plan.margin);
      out.point = sampler.next();
      out.value = 0.0;
      out.samples = 1;
    }
    return out;
  }
  if (n.is_constant()) return out;
  const auto box = sample_box(n, opts);
  chart::PointSampler sampler(box, opts.plan.seed, opts.plan.margin);
  const EvalTape tape(n);
  for (int i = 0; i < opts.plan.count; ++i) {
    const std::vector<double> p = sampler.next();
    const ScaledValue v = tape.evaluate(p);
    if (!v.ok || !std::isfinite(v.value) || negligible(v, opts.tolerance)) {
      out.grade = Grade::Failed;
      out.samples = i + 1;
      out.point = p;
      out.value = v.ok ? v.value : 0.0;
      out.detail = v.ok ? "vanishes at sample" : "undefined at sample";
      return out;
    }
  }
  out.grade = Grade::Probabilistic;
  out.samples = opts.plan.count;
  return out;
}

}  // namespace lrj::cas
