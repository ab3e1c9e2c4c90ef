// Serial reference paths vs their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "scsa/baselines.hpp"
#include "scsa/curvature.hpp"
#include "scsa/param_select.hpp"
#include "scsa/signals.hpp"

namespace {

using namespace scsa;

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_ScanH(benchmark::State& state) {
  const Signal noisy = add_white_noise(gaussian_peaks(single_peak_spec(), static_cast<std::size_t>(state.range(1))), 5.0, 1);
  const HGrid grid = default_h_grid(noisy, 16);
  for (auto _ : state) benchmark::DoNotOptimize(scan_h(noisy, grid, CscsaConfig{}, mode(state)));
}
BENCHMARK(BM_ScanH)->ArgsProduct({{0, 1}, {256, 512}})->ArgNames({"parallel", "n"})->Unit(benchmark::kMillisecond);

void BM_MonteCarloCurvature(benchmark::State& state) {
  const NoiseModelParams p{1.0, 0.3, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(mc_expected_curvature(p, 1'000'000, 7, mode(state)));
}
BENCHMARK(BM_MonteCarloCurvature)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SavitzkyGolay(benchmark::State& state) {
  const Signal y = add_white_noise(standard_test_signal(StandardSignal::Doppler, 1 << 16), 5.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(savitzky_golay(y, {29, 4}));
}
BENCHMARK(BM_SavitzkyGolay)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
