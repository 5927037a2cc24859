// Serial vs OpenMP batch evaluation of a compiled expression tape.
#include <benchmark/benchmark.h>

#include <map>

#include "lrjcalc/cas/eval.hpp"
#include "lrjcalc/cas/normalize.hpp"
#include "lrjcalc/kernels/batch_eval.hpp"

using namespace lrj;

namespace {

cas::ScalarExpr workload() {
  using cas::ScalarExpr;
  const ScalarExpr x = ScalarExpr::variable(0);
  const ScalarExpr y = ScalarExpr::variable(1);
  const ScalarExpr z = ScalarExpr::variable(2);
  ScalarExpr e = cas::pow(x + y - z, 5) * cas::exp(-x) + cas::sin(x * y) * cas::cos(z) / (2 + y * y);
  return cas::normalize(e);
}

const chart::PointSet& points(std::size_t n) {
  static std::map<std::size_t, chart::PointSet> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    chart::Chart c("R3", {"x", "y", "z"});
    it = cache.emplace(n, chart::sample_points(c, {static_cast<int>(n), 1, 0.1})).first;
  }
  return it->second;
}

void BM_serial(benchmark::State& state) {
  const cas::EvalTape tape(workload());
  const auto& pts = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_batch_serial(tape, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_parallel(benchmark::State& state) {
  const cas::EvalTape tape(workload());
  const auto& pts = points(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluate_batch_parallel(tape, pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_serial)->RangeMultiplier(8)->Range(64, 1 << 18);
BENCHMARK(BM_parallel)->RangeMultiplier(8)->Range(64, 1 << 18);
BENCHMARK_MAIN();
