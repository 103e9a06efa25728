#include <benchmark/benchmark.h>

#include <numbers>
#include <sstream>

#include "xyzdm/density.hpp"
#include "xyzdm/dynamics.hpp"
#include "xyzdm/eig.hpp"
#include "xyzdm/entanglement.hpp"
#include "xyzdm/model.hpp"
#include "xyzdm/sweep.hpp"
#include "xyzdm/teleport.hpp"

namespace {

using namespace xyzdm;

const ModelParams kZ{DmAxis::Z, 1.0, 0.2, 1.0, 2.0};
const ModelParams kX{DmAxis::X, 1.0, 0.2, 1.0, 2.0};
const double kAlpha = std::numbers::pi / 3.0;

void BM_HermEig(benchmark::State& state) {
  const Mat4 h = build_hamiltonian(kX);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(BM_HermEig);

void BM_AnalyticSpectrum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(analytic_spectrum(kZ));
}
BENCHMARK(BM_AnalyticSpectrum);

void BM_Evolve(benchmark::State& state) {
  const Spectrum s = analytic_spectrum(kZ);
  const DensityMatrix rho0 = initial_state({StateFamily::Antiparallel, kAlpha});
  for (auto _ : state)
    benchmark::DoNotOptimize(evolve(s, rho0, {0.02, 5.0}));
}
BENCHMARK(BM_Evolve);

void BM_Concurrence(benchmark::State& state) {
  const Spectrum s = analytic_spectrum(kZ);
  const DensityMatrix rho =
      evolve(s, initial_state({StateFamily::Antiparallel, kAlpha}), {0.02, 5.0});
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_TeleportOutput(benchmark::State& state) {
  const Spectrum s = analytic_spectrum(kZ);
  const DensityMatrix rho =
      evolve(s, initial_state({StateFamily::Antiparallel, kAlpha}), {0.02, 5.0});
  const InputState in{std::numbers::pi / 3.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(teleport_output(rho, rho, in));
}
BENCHMARK(BM_TeleportOutput);

void BM_Fidelity(benchmark::State& state) {
  const Spectrum s = analytic_spectrum(kZ);
  const DensityMatrix a =
      evolve(s, initial_state({StateFamily::Antiparallel, kAlpha}), {0.02, 2.0});
  const DensityMatrix b =
      evolve(s, initial_state({StateFamily::Antiparallel, kAlpha}), {0.02, 5.0});
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(a, b));
}
BENCHMARK(BM_Fidelity);

void BM_SweepRows(benchmark::State& state) {
  const SweepConfig cfg = parse_config(R"({
    "model": {"variant": "Dz", "J": 1.0, "gamma": 0.2, "Jz": 2.0, "D": 0.5},
    "Gamma": 0.02,
    "initial": {"family": "antiparallel",
                "alpha": {"start": 0.0, "stop": 3.141592653589793, "count": 9}},
    "time": {"start": 0.0, "stop": 30.0, "count": 11}
  })");
  for (auto _ : state) {
    std::ostringstream out;
    run_sweep(cfg, out, 1);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * 99);
}
BENCHMARK(BM_SweepRows);

}  // namespace

BENCHMARK_MAIN();
