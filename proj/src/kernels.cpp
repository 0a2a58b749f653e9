#include "qwalk/kernels.hpp"

#include <cassert>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace qwalk::kernels {

int num_workers()
{
    return omp_get_max_threads();
}

void set_num_workers(int n)
{
    if (n > 0) {
        omp_set_num_threads(n);
    }
}

void configure_from_env()
{
    if (const char* v = std::getenv("QWALK_NUM_THREADS")) {
        try {
            set_num_workers(std::stoi(v));
        } catch (const std::exception&) {
            // ignore unparsable values; OpenMP defaults remain
        }
    }
}

namespace {

inline Spinor step_site(std::span<const Spinor> in, std::int64_t j, const CoinSplit& pq)
{
    const auto m = static_cast<std::int64_t>(in.size());
    Spinor v{};
    // P only reads the first component, Q only the second.
    if (j - 2 >= 0 && j - 2 < m) {
        const cplx u = in[static_cast<std::size_t>(j - 2)][0];
        v[0] += pq.P[0][0] * u;
        v[1] += pq.P[1][0] * u;
    }
    if (j < m) {
        const cplx u = in[static_cast<std::size_t>(j)][1];
        v[0] += pq.Q[0][1] * u;
        v[1] += pq.Q[1][1] * u;
    }
    return v;
}

inline double cheb_site(std::span<const double> cur, std::span<const double> prev, double s,
                        std::int64_t j)
{
    const auto nc = static_cast<std::int64_t>(cur.size());
    const auto np = static_cast<std::int64_t>(prev.size());
    const double left = (j - 2 >= 0 && j - 2 < nc) ? cur[static_cast<std::size_t>(j - 2)] : 0.0;
    const double right = (j < nc) ? cur[static_cast<std::size_t>(j)] : 0.0;
    // centre of out is (nc + 1) / 2, centre of prev is (np - 1) / 2
    const std::int64_t pj = j - (nc + 1) / 2 + (np - 1) / 2;
    const double p = (np > 0 && pj >= 0 && pj < np) ? prev[static_cast<std::size_t>(pj)] : 0.0;
    return s * (left + right) - p;
}

}  // namespace

namespace serial {

void walk_step(std::span<const Spinor> in, std::span<Spinor> out, const CoinSplit& pq)
{
    assert(out.size() == in.size() + 2);
    const auto n = static_cast<std::int64_t>(out.size());
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = step_site(in, j, pq);
    }
}

void chebyshev_step(std::span<const double> cur, std::span<const double> prev, double s,
                    std::span<double> out)
{
    assert(out.size() == cur.size() + 2 && prev.size() <= cur.size());
    const auto n = static_cast<std::int64_t>(out.size());
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = cheb_site(cur, prev, s, j);
    }
}

cplx phase_sum(std::span<const double> w, std::int64_t lo, double xi)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double arg = xi * static_cast<double>(lo + static_cast<std::int64_t>(k));
        re += w[k] * std::cos(arg);
        im += w[k] * std::sin(arg);
    }
    return {re, im};
}

}  // namespace serial

namespace parallel {

void walk_step(std::span<const Spinor> in, std::span<Spinor> out, const CoinSplit& pq)
{
    assert(out.size() == in.size() + 2);
    const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n > 4096)
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = step_site(in, j, pq);
    }
}

void chebyshev_step(std::span<const double> cur, std::span<const double> prev, double s,
                    std::span<double> out)
{
    assert(out.size() == cur.size() + 2 && prev.size() <= cur.size());
    const auto n = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static) if (n > 8192)
    for (std::int64_t j = 0; j < n; ++j) {
        out[static_cast<std::size_t>(j)] = cheb_site(cur, prev, s, j);
    }
}

cplx phase_sum(std::span<const double> w, std::int64_t lo, double xi)
{
    double re = 0.0;
    double im = 0.0;
    const auto n = static_cast<std::int64_t>(w.size());
#pragma omp parallel for reduction(+ : re, im) schedule(static) if (n > 4096)
    for (std::int64_t k = 0; k < n; ++k) {
        const double arg = xi * static_cast<double>(lo + k);
        re += w[static_cast<std::size_t>(k)] * std::cos(arg);
        im += w[static_cast<std::size_t>(k)] * std::sin(arg);
    }
    return {re, im};
}

}  // namespace parallel

}  // namespace qwalk::kernels
