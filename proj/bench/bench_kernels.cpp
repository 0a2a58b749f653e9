// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_counters_tabular=true
//
// QWALK_NUM_THREADS sets the worker count for the parallel variants.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qwalk/cheb_engine.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/limit_law.hpp"

using namespace qwalk;

namespace {

std::vector<Spinor> random_amps(std::size_t m)
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Spinor> v(m);
    for (auto& u : v) {
        u = {cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
    }
    return v;
}

template <bool Parallel>
void BM_walk_step(benchmark::State& state)
{
    const auto m = static_cast<std::size_t>(state.range(0));
    const std::vector<Spinor> in = random_amps(m);
    std::vector<Spinor> out(m + 2);
    const CoinSplit pq = split(hadamard_coin());
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::walk_step(in, out, pq);
        } else {
            kernels::serial::walk_step(in, out, pq);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m));
}

template <bool Parallel>
void BM_chebyshev_step(benchmark::State& state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    std::vector<double> cur(2 * k + 1, 0.5), prev(2 * k - 1, 0.25), out(2 * k + 3);
    for (auto _ : state) {
        if constexpr (Parallel) {
            kernels::parallel::chebyshev_step(cur, prev, 0.7, out);
        } else {
            kernels::serial::chebyshev_step(cur, prev, 0.7, out);
        }
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <Exec E>
void BM_asym_integrals(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(asym_integrals(state.range(0), 2, 1.0, 0.70710678118654752, E));
    }
}

template <Exec E>
void BM_kolmogorov(benchmark::State& state)
{
    const double r = 0.70710678118654752;
    const Distribution d = qn_distribution({cplx(r, 0), cplx(0, -r)}, state.range(0), r, r);
    const LimitDensity limit = make_limit_density(r, r, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kolmogorov_distance(d, static_cast<double>(state.range(0)), limit, E));
    }
}

}  // namespace

BENCHMARK(BM_walk_step<false>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_walk_step<true>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_chebyshev_step<false>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_chebyshev_step<true>)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_asym_integrals<Exec::serial>)->Arg(500)->Arg(2000);
BENCHMARK(BM_asym_integrals<Exec::parallel>)->Arg(500)->Arg(2000);
BENCHMARK(BM_kolmogorov<Exec::serial>)->Arg(500)->Arg(2000);
BENCHMARK(BM_kolmogorov<Exec::parallel>)->Arg(500)->Arg(2000);

int main(int argc, char** argv)
{
    kernels::configure_from_env();
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
