#include <benchmark/benchmark.h>

#include "qisf/bath.hpp"
#include "qisf/oracle.hpp"
#include "qisf/units.hpp"

namespace {

void BM_McVacf(benchmark::State& state) {
    const auto sd = qisf::bath::SpectralDensity::drude(1.0, 2.0, qisf::units::mass_cmu(7.0));
    const auto s = qisf::modes::diagonalize(qisf::bath::build_matrix(qisf::bath::discretize(sd, 200, 20.0), 0.0));
    qisf::oracle::McConfig cfg;
    cfg.n_samples = static_cast<std::size_t>(state.range(0));
    cfg.n_partitions = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(qisf::oracle::mc_vacf(s, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_McVacf)->Args({10000, 1})->Args({10000, 4})->Unit(benchmark::kMillisecond);

void BM_GaussianDraws(benchmark::State& state) {
    qisf::oracle::CounterRng rng(42);
    for (auto _ : state) benchmark::DoNotOptimize(rng.next_gaussian());
}
BENCHMARK(BM_GaussianDraws);

}  // namespace

BENCHMARK_MAIN();
