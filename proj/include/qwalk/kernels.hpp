#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference in kernels::serial and an OpenMP version in kernels::parallel.
// Element-wise kernels produce bit-identical output in both variants;
// reductions agree up to summation order.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Selects the serial reference or the OpenMP kernel.
enum class Exec { serial, parallel };

}  // namespace qwalk

namespace qwalk::kernels {

/// Worker count used by the parallel kernels.
int num_workers();
void set_num_workers(int n);

/// Applies QWALK_NUM_THREADS from the environment, if set.
void configure_from_env();

namespace detail {

inline cplx node_phase(std::size_t j, std::size_t nodes)
{
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(nodes);
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace detail

namespace serial {

/// One walk step on a dense window. out.size() must be in.size() + 2 and
/// out covers one extra site on each side:
///   out[j] = P * in[j - 2] + Q * in[j]   (missing terms are zero).
void walk_step(std::span<const Spinor> in, std::span<Spinor> out, const CoinSplit& pq);

/// One Chebyshev recurrence step on centred symmetric Laurent coefficients:
///   out[x] = s * (cur[x - 1] + cur[x + 1]) - prev[x]
/// cur has size 2k+1, out has size 2k+3, prev is any odd size <= 2k+1
/// (including empty for a zero seed); all three are centred on exponent 0.
void chebyshev_step(std::span<const double> cur, std::span<const double> prev, double s,
                    std::span<double> out);

/// sum_k w[k] * exp(i * xi * (lo + k))
cplx phase_sum(std::span<const double> w, std::int64_t lo, double xi);

/// (1/M) sum_j f(z_j) with z_j = exp(2 pi i j / M).
template <class F>
cplx circle_mean(std::size_t nodes, F&& f)
{
    double re = 0.0;
    double im = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const cplx v = f(detail::node_phase(j, nodes));
        re += v.real();
        im += v.imag();
    }
    return cplx{re, im} / static_cast<double>(nodes);
}

/// max_i f(i) over [0, count), 0 for an empty range.
template <class F>
double max_over(std::size_t count, F&& f)
{
    double m = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        m = std::fmax(m, f(i));
    }
    return m;
}

}  // namespace serial

namespace parallel {

void walk_step(std::span<const Spinor> in, std::span<Spinor> out, const CoinSplit& pq);
void chebyshev_step(std::span<const double> cur, std::span<const double> prev, double s,
                    std::span<double> out);
cplx phase_sum(std::span<const double> w, std::int64_t lo, double xi);

template <class F>
cplx circle_mean(std::size_t nodes, F&& f)
{
    double re = 0.0;
    double im = 0.0;
    const auto m = static_cast<std::int64_t>(nodes);
#pragma omp parallel for reduction(+ : re, im) schedule(static)
    for (std::int64_t j = 0; j < m; ++j) {
        const cplx v = f(detail::node_phase(static_cast<std::size_t>(j), nodes));
        re += v.real();
        im += v.imag();
    }
    return cplx{re, im} / static_cast<double>(nodes);
}

template <class F>
double max_over(std::size_t count, F&& f)
{
    double m = 0.0;
    const auto c = static_cast<std::int64_t>(count);
#pragma omp parallel for reduction(max : m) schedule(dynamic, 16)
    for (std::int64_t i = 0; i < c; ++i) {
        m = std::fmax(m, f(static_cast<std::size_t>(i)));
    }
    return m;
}

}  // namespace parallel

}  // namespace qwalk::kernels
