#include "lrjcalc/kernels/batch_eval.hpp"

namespace lrj::kernels {

namespace {
BatchValues allocate(std::size_t n) {
  BatchValues out;
  out.value.resize(n);
  out.scale.resize(n);
  out.ok.resize(n);
  return out;
}
}  // namespace

BatchValues evaluate_batch_serial(const cas::EvalTape& tape, const chart::PointSet& points) {
  BatchValues out = allocate(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cas::ScaledValue v = tape.evaluate(points.point(i));
    out.value[i] = v.value;
    out.scale[i] = v.scale;
    out.ok[i] = v.ok ? 1 : 0;
  }
  return out;
}

BatchValues evaluate_batch_parallel(const cas::EvalTape& tape, const chart::PointSet& points) {
  BatchValues out = allocate(points.size());
  const auto n = static_cast<long long>(points.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const cas::ScaledValue v = tape.evaluate(points.point(k));
    out.value[k] = v.value;
    out.scale[k] = v.scale;
    out.ok[k] = v.ok ? 1 : 0;
  }
  return out;
}

}  // namespace lrj::kernels
