#include <benchmark/benchmark.h>

#include <random>

#include "padic/operators.hpp"
#include "padic/wavelets.hpp"

using namespace padic;

namespace {

TestFunction random_function(const Grid& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    TestFunction f(g);
    for (std::uint64_t i = 0; i < g.cells(); ++i) f.set_coeff(i, {u(rng), u(rng)});
    return f;
}

void TransformRadix2(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const Grid g(2, 1, -state.range(0) / 2, state.range(0) - state.range(0) / 2);
    const TestFunction phi = random_function(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(fourier(phi));
    state.SetComplexityN(g.cells());
}
BENCHMARK(TransformRadix2)->DenseRange(4, 16, 4)->Complexity();

void TransformRadix3Planar(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const Grid g(3, 2, -1, state.range(0));
    const TestFunction phi = random_function(g, rng);
    for (auto _ : state) benchmark::DoNotOptimize(fourier(phi));
}
BENCHMARK(TransformRadix3Planar)->DenseRange(1, 3);

void KernelPairing(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const Grid g(3, 1, -state.range(0), state.range(0));
    const TestFunction phi = random_function(g, rng);
    const Distribution d = dist_abs_alpha_minus_n(3, 1, cplx(0.7, 0.2));
    for (auto _ : state) benchmark::DoNotOptimize(d.pair(phi));
}
BENCHMARK(KernelPairing)->DenseRange(1, 4);

void MultiplierApply(benchmark::State& state) {
    std::mt19937_64 rng(4);
    const Grid g(2, 1, -state.range(0) / 2, state.range(0) - state.range(0) / 2);
    TestFunction phi = random_function(g, rng);
    phi.add_coeff(0, -phi.integrate() / phi.coset_measure());
    const Symbol s = Symbol::taibleson(2, 1, cplx(0.5, 0.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_symbol(s, phi, LizorkinKind::SecondKind));
}
BENCHMARK(MultiplierApply)->DenseRange(4, 12, 4);

void WaveletGram(benchmark::State& state) {
    const auto family = wavelet_family(2, -state.range(0), state.range(0), 1);
    for (auto _ : state) benchmark::DoNotOptimize(gram(family, 2));
}
BENCHMARK(WaveletGram)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
