#include <benchmark/benchmark.h>

#include "qisf/dsf.hpp"
#include "qisf/units.hpp"

namespace {

void BM_IsfToDsf(benchmark::State& state) {
    const qisf::modes::NormalModeSpectrum free({0.0}, {1.0}, qisf::units::mass_cmu(7.0));
    const auto grid = qisf::TimeGrid::from_range(-10.0, 10.0, static_cast<std::size_t>(state.range(0)));
    const auto isf = qisf::corr::assemble_isf(free, 150.0, 1.0, grid);
    for (auto _ : state) benchmark::DoNotOptimize(qisf::dsf::isf_to_dsf(isf));
}
BENCHMARK(BM_IsfToDsf)->Arg(1001)->Arg(4001)->Arg(16001)->Unit(benchmark::kMillisecond);

}  // namespace
