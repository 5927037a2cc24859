#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace lrj::chart {

struct Interval {
  double lo = -1.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A single coordinate chart: named coordinates over an axis-aligned box.
class Chart {
 public:
  /// Domain defaults to [-1, 1] on every axis.  Throws std::invalid_argument
  /// on empty/duplicate coordinates or a degenerate interval.
  Chart(std::string name, std::vector<std::string> coords, std::vector<Interval> domain = {});

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<Interval>& domain() const { return domain_; }
  std::optional<int> index_of(std::string_view coord) const;

  friend bool operator==(const Chart&, const Chart&) = default;

 private:
  std::string name_;
  std::vector<std::string> coords_;
  std::vector<Interval> domain_;
};

/// Default margin keeps samples 10% of each axis away from the box faces.
inline constexpr double kDefaultMargin = 0.1;
inline constexpr int kDefaultSamples = 32;

struct SamplePlan {
  int count = kDefaultSamples;
  std::uint64_t seed = 0;
  double margin = kDefaultMargin;  // in [0, 1/2)
};

/// Row-major block of points, one row per point.
class PointSet {
 public:
  PointSet(int dim = 0) : dim_(dim) {}  // NOLINT(google-explicit-constructor)
  int dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  void push_back(std::span<const double> p);
  const std::vector<double>& data() const { return coords_; }

 private:
  int dim_;
  std::size_t count_ = 0;
  std::vector<double> coords_;
};

/// Deterministic stream of points uniformly distributed in the shrunken box
/// [lo + m*len, hi - m*len] per axis; every point lies strictly inside.
class PointSampler {
 public:
  PointSampler(const Chart& chart, std::uint64_t seed, double margin = kDefaultMargin);
  PointSampler(std::span<const Interval> box, std::uint64_t seed, double margin = kDefaultMargin);
  std::vector<double> next();
  int dim() const { return static_cast<int>(lo_.size()); }

 private:
  double uniform();
  std::vector<double> lo_;
  std::vector<double> width_;
  std::mt19937_64 rng_;
};

/// The first plan.count points of PointSampler(chart, plan.seed, plan.margin).
/// Throws std::invalid_argument when count < 1 or margin is outside [0, 1/2).
PointSet sample_points(const Chart& chart, const SamplePlan& plan);

void validate(const SamplePlan& plan);

}  // namespace lrj::chart
