#pragma once

#include <cstdint>

#include "qwalk/coin.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

/// Weak-limit density of X_n / n:
///   t (1 + lambda y) / (pi (1 - y^2) sqrt(s^2 - y^2))  on (-s, s).
struct LimitDensity {
    double s;
    double t;
    double lambda;
};

/// Validates s^2 + t^2 = 1 and |lambda| <= 1/s.
LimitDensity make_limit_density(double s, double t, double lambda);

/// |psi1|^2 - |psi2|^2 + 2 Re(psi1 conj(psi2)) t/s
double lambda_psi(const Spinor& psi, double s, double t);

/// |phi1|^2 - |phi2|^2 - (a b conj(phi1) phi2 + conj(a b) phi1 conj(phi2)) / |a|^2
double lambda_phi(const Spinor& phi, const CoinMatrix& c);

/// Limit density for the walk driven by coin c from delta_0 (x) phi.
LimitDensity limit_density_for(const Spinor& phi, const CoinMatrix& c);

double density(const LimitDensity& d, double y);

/// Integral of the density from -s to y.
double cdf(const LimitDensity& d, double y);

/// Integral of y * density over (-s, s).
double limit_mean(const LimitDensity& d);

/// (t/pi) \int e^{i xi y} (1 + lambda y) / ((1 - y^2) sqrt(s^2 - y^2)) dy
cplx limit_char_fn(const LimitDensity& d, double xi);

/// Contour integrals of products of T_n and U_{n-1} at arguments rotated
/// by xi/n, weighted by z^k.
struct AsymValues {
    cplx A;  // T_n  * T_n
    cplx B;  // T_n  * U_{n-1}
    cplx C;  // U_{n-1} * T_n
    cplx D;  // U_{n-1} * U_{n-1}
};

std::size_t asym_nodes(std::int64_t n, std::int64_t k);

/// Finite-n values by the trapezoid rule on |z| = 1 with asym_nodes(n, k)
/// nodes, cross-checked against twice as many nodes.
AsymValues asym_integrals(std::int64_t n, std::int64_t k, double xi, double s,
                          Exec exec = Exec::parallel);

/// n -> infinity limits of asym_integrals.
AsymValues asym_limits(std::int64_t k, double xi, double s);

/// sup_y |F_n(y) - F(y)| between the CDF of X/scale under d and the limit CDF.
double kolmogorov_distance(const Distribution& dist, double scale, const LimitDensity& limit,
                           Exec exec = Exec::parallel);

}  // namespace qwalk
