#include <benchmark/benchmark.h>

#include "qisf/bath.hpp"
#include "qisf/normal_modes.hpp"
#include "qisf/units.hpp"

namespace {

qisf::bath::CoupledPotentialMatrix drude_matrix(std::size_t n) {
    const auto sd = qisf::bath::SpectralDensity::drude(1.0, 2.0, qisf::units::mass_cmu(7.0));
    return qisf::bath::build_matrix(qisf::bath::discretize(sd, n, 100.0), 0.0);
}

void BM_Arrowhead(benchmark::State& state) {
    const auto v = drude_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qisf::modes::diagonalize(v, qisf::modes::EigenMethod::arrowhead));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Arrowhead)->Arg(125)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Jacobi(benchmark::State& state) {
    const auto v = drude_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qisf::modes::diagonalize(v, qisf::modes::EigenMethod::jacobi));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Jacobi)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond)->Complexity();

}  // namespace
