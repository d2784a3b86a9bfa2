#include <benchmark/benchmark.h>

#include "isoshare/characterization.hpp"
#include "isoshare/cost_minimization.hpp"
#include "isoshare/production.hpp"
#include "isoshare/profit.hpp"

using namespace isoshare;

static void BM_EvaluateCobbDouglas(benchmark::State& state) {
  const CobbDouglas pf({2.5, 0.3});
  const Bundle b{1.7, 4.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pf.evaluate(b));
  }
}
BENCHMARK(BM_EvaluateCobbDouglas);

static void BM_GradientCES(benchmark::State& state) {
  const CES pf({1.0, 0.5, -1.0});
  const Bundle b{1.7, 4.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pf.gradient(b));
  }
}
BENCHMARK(BM_GradientCES);

static void BM_IsoquantSolve(benchmark::State& state) {
  const CES pf({1.0, 0.5, -1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(isoquant_solve_K(pf, 0.75, 1.0));
  }
}
BENCHMARK(BM_IsoquantSolve);

static void BM_MinimizeCostCobbDouglas(benchmark::State& state) {
  const CobbDouglas pf({1.0, 1.0 / 3.0});
  const FactorPrices prices{1.0, 2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_cost(pf, prices, 6.0));
  }
}
BENCHMARK(BM_MinimizeCostCobbDouglas);

static void BM_MinimizeCostCES(benchmark::State& state) {
  const CES pf({1.0, 0.5, -1.0});
  const FactorPrices prices{4.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize_cost(pf, prices, 1.0));
  }
}
BENCHMARK(BM_MinimizeCostCES);

static void BM_ShareScanDefaultGrid(benchmark::State& state) {
  const CobbDouglas pf({2.5, 0.3});
  const ScanConfig cfg = ScanConfig::default_grid();
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(share_scan(pf, cfg, threads));
  }
}
BENCHMARK(BM_ShareScanDefaultGrid)->Arg(1)->Arg(4);

static void BM_ZeroProfitRental(benchmark::State& state) {
  const CobbDouglas pf({1.0, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(zero_profit_rental(pf, 0.5));
  }
}
BENCHMARK(BM_ZeroProfitRental);

BENCHMARK_MAIN();
