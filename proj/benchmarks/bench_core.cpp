#include <benchmark/benchmark.h>

#include "circlecat/gqbs.hpp"
#include "circlecat/teleport.hpp"

using namespace circlecat;

namespace {

QuditCoeffs superposition_input(const CircleConfig& cfg) {
  QuditCoeffs raw;
  for (int l = 0; l < cfg.n; ++l)
    raw.coeffs.push_back(Complex{1.0L / static_cast<Real>(l + 1), 0.1L * l});
  return normalize_input(cfg, raw);
}

void bm_joint_inner(benchmark::State& state) {
  CircleConfig cfg(static_cast<int>(state.range(0)), Complex{1.0L, 0});
  auto input = superposition_input(cfg);
  auto joint = joint_state(cfg, input, 0, 0);
  for (auto _ : state) benchmark::DoNotOptimize(inner(joint, joint));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_joint_inner)->Arg(2)->Arg(4)->Arg(8)->Complexity();

void bm_schmidt_coeffs(benchmark::State& state) {
  CircleConfig cfg(static_cast<int>(state.range(0)), Complex{2.0L, 0});
  for (auto _ : state)
    for (long q = 0; q < cfg.n; ++q) benchmark::DoNotOptimize(schmidt_coeffs(cfg, q));
}
BENCHMARK(bm_schmidt_coeffs)->Arg(4)->Arg(8)->Arg(16);

void bm_teleport_report(benchmark::State& state) {
  CircleConfig cfg(static_cast<int>(state.range(0)), Complex{1.0L, 0});
  auto input = superposition_input(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(teleport_report(cfg, input, 0, 0));
}
BENCHMARK(bm_teleport_report)->Arg(2)->Arg(4)->Arg(8);

void bm_success_closed(benchmark::State& state) {
  CircleConfig cfg(static_cast<int>(state.range(0)), Complex{2.0L, 0});
  for (auto _ : state) benchmark::DoNotOptimize(success_probability_closed(cfg));
}
BENCHMARK(bm_success_closed)->Arg(4)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
