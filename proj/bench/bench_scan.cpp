#include <array>
#include <vector>

#include <benchmark/benchmark.h>

#include "dqg/rootfind.hpp"
#include "dqg/secular.hpp"

namespace {

const dqg::ValidatedGraph& star(double step) {
  static const std::array<double, 3> lengths{0.8, 1.1, 1.5};
  static const dqg::ValidatedGraph coarse = dqg::validate(dqg::star_spec(lengths, 0.01));
  static const dqg::ValidatedGraph fine = dqg::validate(dqg::star_spec(lengths, 0.005));
  return step < 0.01 ? fine : coarse;
}

std::vector<double> grid(const dqg::ValidatedGraph& g, int points) {
  const dqg::ScanConfig cfg = dqg::default_scan_config(g);
  std::vector<double> ks;
  for (int i = 0; i < points; ++i) ks.push_back(cfg.k_min + (cfg.k_max - cfg.k_min) * (i + 0.5) / points);
  return ks;
}

template <bool Parallel>
void grid_evaluation(benchmark::State& state) {
  const dqg::ValidatedGraph& g = star(0.005);
  const auto ks = grid(g, static_cast<int>(state.range(0)));
  const dqg::ScalarFn f = [&g](double k) { return dqg::secular_determinant(k, g, dqg::SecularForm::Reduced); };
  for (auto _ : state) {
    auto values = Parallel ? dqg::evaluate_parallel(f, ks) : dqg::evaluate_serial(f, ks);
    benchmark::DoNotOptimize(values.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void full_scan(benchmark::State& state) {
  const dqg::ValidatedGraph& g = star(state.range(0) == 0 ? 0.01 : 0.005);
  dqg::ScanConfig cfg = dqg::default_scan_config(g);
  cfg.parallel = Parallel;
  for (auto _ : state) {
    auto roots = dqg::find_roots(g, cfg, dqg::SecularForm::Full);
    benchmark::DoNotOptimize(roots.roots.data());
  }
}

}  // namespace

BENCHMARK(grid_evaluation<false>)->Name("grid_evaluation/serial")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(grid_evaluation<true>)->Name("grid_evaluation/parallel")->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(full_scan<false>)->Name("star_scan/serial")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(full_scan<true>)->Name("star_scan/parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
