#include <benchmark/benchmark.h>

#include "qisf/bath.hpp"
#include "qisf/correlators.hpp"
#include "qisf/units.hpp"

namespace {

const qisf::modes::NormalModeSpectrum& spectrum() {
    static const auto s = [] {
        const auto sd = qisf::bath::SpectralDensity::drude(1.0, 2.0, qisf::units::mass_cmu(7.0));
        return qisf::modes::diagonalize(qisf::bath::build_matrix(qisf::bath::discretize(sd, 2000, 100.0), 0.0));
    }();
    return s;
}

void BM_Tabulate(benchmark::State& state) {
    const auto grid = qisf::TimeGrid::from_range(-10.0, 10.0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qisf::corr::tabulate(spectrum(), 150.0, grid));
}
BENCHMARK(BM_Tabulate)->Arg(1001)->Arg(4001)->Unit(benchmark::kMillisecond);

void BM_XViaCumulant(benchmark::State& state) {
    const auto grid = qisf::TimeGrid::from_range(-10.0, 10.0, 4001);
    for (auto _ : state) benchmark::DoNotOptimize(qisf::corr::x_via_cumulant(spectrum(), 150.0, grid));
}
BENCHMARK(BM_XViaCumulant)->Unit(benchmark::kMillisecond);

}  // namespace
