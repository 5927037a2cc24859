#pragma once

#include <cstddef>
#include <vector>

#include "lrjcalc/cas/eval.hpp"
#include "lrjcalc/chart/chart.hpp"

namespace lrj::kernels {

struct BatchValues {
  std::vector<double> value;
  std::vector<double> scale;
  std::vector<unsigned char> ok;
};

/// Reference implementation: one tape evaluation per point, in order.
BatchValues evaluate_batch_serial(const cas::EvalTape& tape, const chart::PointSet& points);

/// Same contract, points split across OpenMP threads.  Results are written
/// by index, so output is identical to the serial version.
BatchValues evaluate_batch_parallel(const cas::EvalTape& tape, const chart::PointSet& points);

/// Calls f(i) for i in [0, n).  Iterations run on OpenMP threads when
/// `parallel` is set; f must only write to per-index state.  The first
/// exception (lowest index) is rethrown after the loop.
template <class F>
void for_each_index(std::size_t n, F&& f, bool parallel = true);

}  // namespace lrj::kernels

#include "lrjcalc/kernels/for_each_index.inl"
