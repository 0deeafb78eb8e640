#include <benchmark/benchmark.h>

#include "sgi/constants.hpp"
#include "sgi/density.hpp"
#include "sgi/pipeline.hpp"

using namespace sgi;

namespace {

const ResolvedScenario& bench_run() {
  static const ResolvedScenario s = resolve(load_preset("noisy-desk"));
  return s;
}

void coeff_set_high_t(benchmark::State& state) {
  const ResolvedScenario& s = bench_run();
  double t = 0.37 * s.duration();
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_coeff_set(t, s.mass(), s.gamma(), s.profile, s.noise));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(coeff_set_high_t);

void closed_form_coherence(benchmark::State& state) {
  const ResolvedScenario& s = bench_run();
  const CoeffSet c = make_coeff_set(0.37 * s.duration(), s.mass(), s.gamma(), s.profile, s.noise);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence(c, s.sigma(), CoherenceMode::ClosedFormHighT));
  }
}
BENCHMARK(closed_form_coherence);

void trace_integral_coherence(benchmark::State& state) {
  const ResolvedScenario& s = bench_run();
  const CoeffSet c = make_coeff_set(0.37 * s.duration(), s.mass(), s.gamma(), s.profile, s.noise);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence(c, s.sigma(), CoherenceMode::TraceIntegral));
  }
}
BENCHMARK(trace_integral_coherence);

// Omega t cycles of the kernel inside the window.
void abc_quadrature(benchmark::State& state) {
  const double omega = 1e10, t = static_cast<double>(state.range(0)) / omega;
  const double m = 1.8e-25, gamma = 1e7;
  const SpectralFunction sf = SpectralFunction::sharp_cutoff(2 * m * gamma, omega);
  const NoiseModel table = NoiseModel::quadrature_kernel(sf, 0.1, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coeff_abc_quadrature(t, gamma, *table.kernel, table.max_frequency));
  }
  state.SetLabel("Omega t = " + std::to_string(state.range(0)));
}
BENCHMARK(abc_quadrature)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void kernel_table(benchmark::State& state) {
  const double omega = 1e10, t = static_cast<double>(state.range(0)) / omega;
  const SpectralFunction sf = SpectralFunction::sharp_cutoff(3.6e-18, omega);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NoiseModel::quadrature_kernel(sf, 0.1, t));
  }
}
BENCHMARK(kernel_table)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void decoherence_search(benchmark::State& state) {
  const ResolvedScenario s = resolve(load_preset("paper-squid"));
  for (auto _ : state) benchmark::DoNotOptimize(scenario_decoherence_time(s));
}
BENCHMARK(decoherence_search)->Unit(benchmark::kMicrosecond);

void trace_run(benchmark::State& state) {
  const ResolvedScenario& s = bench_run();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_trace(s, threads));
  state.SetItemsProcessed(state.iterations() * s.config.samples);
}
BENCHMARK(trace_run)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
