#include <benchmark/benchmark.h>

#include "deltaq/delta.hpp"
#include "deltaq/hypergeo.hpp"
#include "deltaq/osp.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/tableaux.hpp"

using namespace deltaq;

static void BM_QBinomial(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(10)->Arg(20)->Arg(40);

static void BM_KostkaFoulkes(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition lam(std::vector<int>(1, n));   // hook-free row shape
    std::vector<int> ones(n, 1);
    Partition mu(ones);
    for (auto _ : state) {
        kf_memo_clear();   // measure the uncached computation
        benchmark::DoNotOptimize(kostka_foulkes(lam, mu));
    }
}
BENCHMARK(BM_KostkaFoulkes)->Arg(5)->Arg(6)->Arg(7);

static void BM_QPrimeTable(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        kf_memo_clear();
        for (const Partition& mu : enumerate_partitions(n))
            benchmark::DoNotOptimize(qprime(mu));
    }
}
BENCHMARK(BM_QPrimeTable)->Arg(5)->Arg(6);

static void BM_CViaQprime(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(c_via_qprime(n, (n + 1) / 2));
}
BENCHMARK(BM_CViaQprime)->Arg(5)->Arg(6)->Arg(7);

static void BM_CViaOsp(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(c_via_osp(n, (n + 1) / 2, n));
}
BENCHMARK(BM_CViaOsp)->Arg(4)->Arg(5)->Arg(6);

static void BM_DeltaPrimeElem(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_prime_elem_t0((n + 1) / 2, n));
}
BENCHMARK(BM_DeltaPrimeElem)->Arg(5)->Arg(6)->Arg(7);

static void BM_DeltaPrimeSchur(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Partition nu({2, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_prime_schur_t0(nu, n));
}
BENCHMARK(BM_DeltaPrimeSchur)->Arg(4)->Arg(5)->Arg(6);

static void BM_Phi32(benchmark::State& state) {
    int j = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(phi32(-j, 3, 2, j + 2, j + 3, 1, j));
}
BENCHMARK(BM_Phi32)->Arg(3)->Arg(5)->Arg(8);

BENCHMARK_MAIN();
