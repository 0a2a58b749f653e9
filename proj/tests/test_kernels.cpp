#include "doctest.h"

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qwalk/kernels.hpp"

using namespace qwalk;

namespace {

struct WorkerGuard {
    int saved = kernels::num_workers();
    explicit WorkerGuard(int n) { kernels::set_num_workers(n); }
    ~WorkerGuard() { kernels::set_num_workers(saved); }
};

}  // namespace

TEST_CASE("walk_step: OpenMP kernel matches the serial reference bit for bit")
{
    WorkerGuard guard(4);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    const CoinSplit pq = split(oracle::random_coin(rng));
    for (std::size_t m : {1u, 2u, 17u, 5000u, 20001u}) {
        std::vector<Spinor> in(m);
        for (auto& u : in) {
            u = {cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
        }
        std::vector<Spinor> a(m + 2), b(m + 2);
        kernels::serial::walk_step(in, a, pq);
        kernels::parallel::walk_step(in, b, pq);
        CHECK(a == b);
    }
}

TEST_CASE("chebyshev_step: OpenMP kernel matches the serial reference bit for bit")
{
    WorkerGuard guard(4);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t k : {0u, 1u, 10u, 6000u}) {
        std::vector<double> cur(2 * k + 1), prev(k == 0 ? 0 : 2 * k - 1);
        for (auto& v : cur) v = u(rng);
        for (auto& v : prev) v = u(rng);
        std::vector<double> a(cur.size() + 2), b(cur.size() + 2);
        kernels::serial::chebyshev_step(cur, prev, 0.6, a);
        kernels::parallel::chebyshev_step(cur, prev, 0.6, b);
        CHECK(a == b);
    }
}

TEST_CASE("chebyshev_step centres prev of any odd size")
{
    // cur = 1 (k = 0), prev empty: out = s z^-1 + 0 + s z
    std::vector<double> out(3);
    kernels::serial::chebyshev_step(std::vector<double>{1.0}, {}, 0.5, out);
    CHECK(out == std::vector<double>{0.5, 0.0, 0.5});

    // cur size 5, prev size 1 at the centre
    const std::vector<double> cur{1, 2, 3, 4, 5};
    std::vector<double> out2(7);
    kernels::serial::chebyshev_step(cur, std::vector<double>{10.0}, 1.0, out2);
    CHECK(out2 == std::vector<double>{1, 2, 4, 6 - 10, 8, 4, 5});
}

TEST_CASE("reductions agree up to summation order")
{
    WorkerGuard guard(4);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<double> w(40001);
    for (auto& v : w) v = u(rng);
    for (double xi : {0.0, 0.3, 2.5}) {
        const cplx a = kernels::serial::phase_sum(w, -20000, xi);
        const cplx b = kernels::parallel::phase_sum(w, -20000, xi);
        CHECK(std::abs(a - b) < 1e-9);
    }

    auto f = [](cplx z) { return z * z + std::conj(z) + 2.0; };
    const cplx ms = kernels::serial::circle_mean(1024, f);
    const cplx mp = kernels::parallel::circle_mean(1024, f);
    CHECK(std::abs(ms - 2.0) < 1e-14);
    CHECK(std::abs(mp - 2.0) < 1e-14);

    auto h = [&](std::size_t i) { return w[i]; };
    CHECK(kernels::serial::max_over(w.size(), h) == kernels::parallel::max_over(w.size(), h));
    CHECK(kernels::serial::max_over(0, h) == 0.0);
}
