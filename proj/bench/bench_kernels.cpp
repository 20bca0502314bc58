// Serial reference path against the OpenMP path for the grid and quadrature
// kernels. Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "dshell/cross_sections.hpp"
#include "dshell/observables.hpp"
#include "dshell/spectra.hpp"

using namespace dshell;

namespace {

PotentialSpec spec_of(double lambda) {
  PotentialSpec s;
  s.lambda = lambda;
  return s;
}

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "openmp"); }

void BM_SpectrumCurve(benchmark::State& state) {
  const PotentialSpec s = spec_of(100.0);
  const Pole p = find_resonance(s, 3);
  QuadratureOptions opts;
  opts.exec = exec_of(state);
  const DecaySpectrum warm(s, p, opts);
  benchmark::DoNotOptimize(warm.decay_constant());
  for (auto _ : state) {
    SpectrumCurve c = spectrum_curve(s, p, 80.0, 95.0, 200001, opts);
    benchmark::DoNotOptimize(c.dp_de.data());
  }
  label(state);
}

void BM_CrossSectionBundle(benchmark::State& state) {
  const PotentialSpec s = spec_of(100.0);
  const Pole p = find_resonance(s, 3);
  const Pole q = find_resonance(s, 4);
  const std::vector<double> grid = uniform_grid(1.0, 400.0, 200001);
  for (auto _ : state) {
    CrossSectionBundle b = cross_section_bundle(s, p, grid, q, exec_of(state));
    benchmark::DoNotOptimize(b.exact.data());
  }
  label(state);
}

void BM_DecayConstant(benchmark::State& state) {
  const PotentialSpec s = spec_of(100.0);
  const Pole p = find_resonance(s, 8);
  QuadratureOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(decay_constant_total(s, p, opts).value);
  label(state);
}

void BM_Table(benchmark::State& state) {
  QuadratureOptions opts;
  opts.exec = exec_of(state);
  for (auto _ : state) {
    auto rows = compute_table(spec_of(-10.0), 8, opts);
    benchmark::DoNotOptimize(rows.data());
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_SpectrumCurve)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossSectionBundle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecayConstant)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
