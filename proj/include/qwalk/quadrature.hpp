#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk::quad {

/// Gauss-Legendre rule on [-1, 1] with kOrder nodes.
inline constexpr std::size_t kOrder = 20;

struct Rule {
    std::array<double, kOrder> nodes;
    std::array<double, kOrder> weights;
};

/// Nodes and weights, computed once by Newton iteration on P_kOrder.
const Rule& gauss_legendre();

struct Options {
    double abs_tol = 1e-12;
    int max_depth = 30;
    /// Initial number of equal panels before adaptive bisection.
    int panels = 8;
};

namespace detail {

template <class T, class F>
T panel(F& f, double a, double b)
{
    const Rule& r = gauss_legendre();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    T acc{};
    for (std::size_t i = 0; i < kOrder; ++i) {
        acc += r.weights[i] * f(mid + half * r.nodes[i]);
    }
    return half * acc;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }

template <class T, class F>
bool refine(F& f, double a, double b, T whole, double tol, int depth, T& out)
{
    const double m = 0.5 * (a + b);
    const T left = panel<T>(f, a, m);
    const T right = panel<T>(f, m, b);
    const T both = left + right;
    if (magnitude(both - whole) <= tol) {
        out += both;
        return true;
    }
    if (depth <= 0) {
        out += both;
        return false;
    }
    return refine(f, a, m, left, 0.5 * tol, depth - 1, out) &&
           refine(f, m, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre integral of f over [a, b]. T is double
/// or std::complex<double>. Throws QuadratureFailure when bisection runs out
/// of depth before the panel estimates agree to abs_tol.
template <class T, class F>
T integrate(F&& f, double a, double b, const Options& opt = {})
{
    if (a == b) {
        return T{};
    }
    T total{};
    bool ok = true;
    const double h = (b - a) / opt.panels;
    for (int p = 0; p < opt.panels; ++p) {
        const double lo = a + h * p;
        const double hi = (p + 1 == opt.panels) ? b : a + h * (p + 1);
        const T whole = detail::panel<T>(f, lo, hi);
        ok = detail::refine(f, lo, hi, whole, opt.abs_tol / opt.panels, opt.max_depth, total) && ok;
    }
    if (!ok || !std::isfinite(detail::magnitude(total))) {
        throw QuadratureFailure("adaptive Gauss-Legendre missed target " +
                                std::to_string(opt.abs_tol) + " on [" + std::to_string(a) +
                                ", " + std::to_string(b) + "]");
    }
    return total;
}

}  // namespace qwalk::quad
