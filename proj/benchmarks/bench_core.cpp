#include "cga/derivations.hpp"
#include "cga/lie_algebra.hpp"
#include "cga/linalg.hpp"
#include "cga/prng.hpp"
#include "cga/two_local.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cga;

void BM_RrefRandomSquare(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(42);
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = small_rational(rng);
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_RrefRandomSquare)->Arg(16)->Arg(32)->Arg(64);

void BM_LeibnizAssembly(benchmark::State& state) {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(leibniz_matrix(a));
    }
    state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_LeibnizAssembly)->Arg(1)->Arg(9)->Arg(21);

void BM_DerivationKernel(benchmark::State& state) {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel(leibniz_matrix(a)));
    }
    state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_DerivationKernel)->Arg(1)->Arg(9)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_JacobiSweep(benchmark::State& state) {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(a.jacobi_defect());
    }
}
BENCHMARK(BM_JacobiSweep)->Arg(1)->Arg(9)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_ResolveTrial(benchmark::State& state) {
    const LieAlgebra a = LieAlgebra::conformal_galilei(HalfInt(state.range(0)));
    const DerivationSpace ders = DerivationSpace::compute(a);
    const RationalMatrix planted = random_derivation(ders, 7);
    const AdversarialOracle oracle(ders, planted, 8);
    const auto probes = default_probes(a, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(resolve_two_local(a, ders, oracle, probes));
    }
    state.SetLabel("dim " + std::to_string(a.dim()));
}
BENCHMARK(BM_ResolveTrial)->Arg(1)->Arg(5)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
