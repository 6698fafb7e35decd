#include <benchmark/benchmark.h>

#include "fsig/cyclic.hpp"
#include "fsig/cyclotomic.hpp"
#include "fsig/group.hpp"

using fsig::BigInt;

static void BM_CyclicQpoly(benchmark::State& state) {
    const fsig::CyclicSingularity sing = fsig::validate_singularity(6, {1, 2, 3});
    for (auto _ : state) {
        auto qp = fsig::multiplicity_qpoly(sing, BigInt(7), 0);
        benchmark::DoNotOptimize(qp);
    }
}
BENCHMARK(BM_CyclicQpoly);

static void BM_CyclicQpolyLargeOrder(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const fsig::CyclicSingularity sing =
        fsig::validate_singularity(n, {1, 2, static_cast<long long>(n - 3)});
    for (auto _ : state) {
        auto qp = fsig::multiplicity_qpoly(sing, BigInt(101), 0);
        benchmark::DoNotOptimize(qp);
    }
}
BENCHMARK(BM_CyclicQpolyLargeOrder)->Arg(30)->Arg(100)->Arg(300);

static void BM_BruteForceOracle(benchmark::State& state) {
    const fsig::CyclicSingularity sing = fsig::validate_singularity(6, {1, 2, 3});
    const unsigned long e = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        auto counts = fsig::brute_force_all(sing, BigInt(7), e);
        benchmark::DoNotOptimize(counts);
    }
}
BENCHMARK(BM_BruteForceOracle)->Arg(1)->Arg(2);

static void BM_GroupEngineE6(benchmark::State& state) {
    const fsig::GroupSpec spec = fsig::GroupSpec::from_file(std::string(FSIG_DATA_DIR) + "/e6.json");
    for (auto _ : state) {
        auto qp = fsig::fsignature_qpoly_general(spec, BigInt(5));
        benchmark::DoNotOptimize(qp);
    }
}
BENCHMARK(BM_GroupEngineE6);

static void BM_GeomSum(benchmark::State& state) {
    const BigInt huge = fsig::pow_big(BigInt(7), 100);
    for (auto _ : state) {
        auto value = fsig::geom_sum(24, 5, huge);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_GeomSum);

static void BM_Theta(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const fsig::CyclicSingularity sing = fsig::validate_singularity(
        n, {1, 2, static_cast<long long>(n / 2), static_cast<long long>(n - 1)});
    for (auto _ : state) {
        auto value = fsig::theta(sing, 0, 0, n - 1);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_Theta)->Arg(12)->Arg(60)->Arg(360);

BENCHMARK_MAIN();
