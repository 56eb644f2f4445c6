#include "cgpot/bounds.hpp"
#include "cgpot/cg.hpp"
#include "cgpot/discretizer.hpp"
#include "cgpot/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace cgpot;

static void BM_BuildPartition(benchmark::State& state) {
    const auto d = power_density(0.5);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cert = build_partition(d, k);
        benchmark::DoNotOptimize(cert.nodes.data());
    }
}
BENCHMARK(BM_BuildPartition)->Arg(8)->Arg(32)->Arg(64);

static void BM_DiscretizationErrorInterior(benchmark::State& state) {
    const auto cert = build_partition(power_density(0.5), static_cast<int>(state.range(0)));
    double x = -0.57;
    for (auto _ : state) {
        benchmark::DoNotOptimize(discretization_error(cert, x));
    }
}
BENCHMARK(BM_DiscretizationErrorInterior)->Arg(8)->Arg(32);

static void BM_ThreeSums(benchmark::State& state) {
    const auto cert = build_partition(power_density(0.5), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(three_sums(cert, 0.21).total());
    }
}
BENCHMARK(BM_ThreeSums)->Arg(8)->Arg(32);

static void BM_EndpointOfT(benchmark::State& state) {
    const auto s = make_example12(0.5, 1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(endpoint_a_of_t(s, 0.07));
    }
}
BENCHMARK(BM_EndpointOfT);

static void BM_CgDouble(benchmark::State& state) {
    const auto lam = generate_spectrum(make_example11(), 1000).eigenvalues;
    const DiagonalSystem sys{lam, {}};
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cg(sys, steps).values.back());
    }
}
BENCHMARK(BM_CgDouble)->Arg(30)->Arg(120);

static void BM_CgExtended64(benchmark::State& state) {
    const auto lam = generate_spectrum(make_example11(), 1000).eigenvalues;
    const DiagonalSystem sys{lam, {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_cg(sys, 30, Precision::extended(64)).values.back());
    }
}
BENCHMARK(BM_CgExtended64);

static void BM_CorollaryBound(benchmark::State& state) {
    const auto lam = generate_spectrum(make_example11(), 1000).eigenvalues;
    for (auto _ : state) {
        benchmark::DoNotOptimize(corollary_bound(lam, 5, 80, 1.0, 0.0));
    }
}
BENCHMARK(BM_CorollaryBound);

BENCHMARK_MAIN();
