#include "lrjcalc/chart/chart.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lrj::chart {

Chart::Chart(std::string name, std::vector<std::string> coords, std::vector<Interval> domain)
    : name_(std::move(name)), coords_(std::move(coords)), domain_(std::move(domain)) {
  if (coords_.empty()) throw std::invalid_argument("chart needs at least one coordinate");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    for (std::size_t j = i + 1; j < coords_.size(); ++j) {
      if (coords_[i] == coords_[j]) throw std::invalid_argument("duplicate coordinate '" + coords_[i] + "'");
    }
  }
  if (domain_.empty()) domain_.assign(coords_.size(), Interval{});
  if (domain_.size() != coords_.size()) {
    throw std::invalid_argument("chart domain has " + std::to_string(domain_.size()) + " intervals for " +
                                std::to_string(coords_.size()) + " coordinates");
  }
  for (const auto& iv : domain_) {
    if (!(iv.length() > 0) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw std::invalid_argument("chart domain interval must have positive finite length");
    }
  }
}

std::optional<int> Chart::index_of(std::string_view coord) const {
  auto it = std::find(coords_.begin(), coords_.end(), coord);
  if (it == coords_.end()) return std::nullopt;
  return static_cast<int>(it - coords_.begin());
}

void PointSet::push_back(std::span<const double> p) {
  if (static_cast<int>(p.size()) != dim_) throw std::invalid_argument("point dimension mismatch");
  coords_.insert(coords_.end(), p.begin(), p.end());
  ++count_;
}

void validate(const SamplePlan& plan) {
  if (plan.count < 1) throw std::invalid_argument("sample count must be at least 1");
  if (!(plan.margin >= 0.0 && plan.margin < 0.5)) throw std::invalid_argument("sample margin must lie in [0, 1/2)");
}

PointSampler::PointSampler(const Chart& chart, std::uint64_t seed, double margin)
    : PointSampler(chart.domain(), seed, margin) {}

PointSampler::PointSampler(std::span<const Interval> box, std::uint64_t seed, double margin) : rng_(seed) {
  if (!(margin >= 0.0 && margin < 0.5)) throw std::invalid_argument("sample margin must lie in [0, 1/2)");
  for (const auto& iv : box) {
    lo_.push_back(iv.lo + margin * iv.length());
    width_.push_back(iv.length() * (1.0 - 2.0 * margin));
  }
}

// Open unit interval from the top 53 bits; mt19937_64 output is fully
// specified, so the stream is portable.
double PointSampler::uniform() {
  const std::uint64_t bits = rng_() >> 11U;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

std::vector<double> PointSampler::next() {
  std::vector<double> p(lo_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = lo_[i] + width_[i] * uniform();
  return p;
}

PointSet sample_points(const Chart& chart, const SamplePlan& plan) {
  validate(plan);
  PointSampler sampler(chart, plan.seed, plan.margin);
  PointSet out(chart.dim());
  for (int i = 0; i < plan.count; ++i) out.push_back(sampler.next());
  return out;
}

}  // namespace lrj::chart
