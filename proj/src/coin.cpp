#include "qwalk/coin.hpp"

#include <array>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

double norm_sq(const Spinor& u)
{
    return std::norm(u[0]) + std::norm(u[1]);
}

Spinor apply(const Mat2& m, const Spinor& u)
{
    return {m[0][0] * u[0] + m[0][1] * u[1], m[1][0] * u[0] + m[1][1] * u[1]};
}

void require_unit(const Spinor& u, double tol, const char* what)
{
    const double n2 = norm_sq(u);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
        throw NormViolation(std::string(what) + ": squared norm " + std::to_string(n2) +
                            " differs from 1");
    }
}

Mat2 CoinMatrix::matrix() const
{
    return {{{a_, b_}, {-std::conj(b_), std::conj(a_)}}};
}

namespace {

// |a|^2 + |b|^2 - 1 with every square formed exactly (fma) and summed in
// extended precision.
long double unit_defect(const std::array<double, 4>& v)
{
    long double acc = -1.0L;
    for (double x : v) {
        const double p = x * x;
        acc += static_cast<long double>(p);
        acc += static_cast<long double>(std::fma(x, x, -p));
    }
    return acc;
}

// Rounded entries leave |a|^2 + |b|^2 a few 1e-16 away from 1, and the walk
// multiplies the norm by that same factor on every step. Search the entries
// within two ulps for the representable coin closest to unitary.
std::array<double, 4> snap_to_unit(std::array<double, 4> v)
{
    const double scale = 1.0 / std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
    for (double& x : v) {
        x *= scale;
    }
    auto nudged = [](double x, int k) {
        if (x == 0.0) {
            return x;
        }
        for (; k > 0; --k) x = std::nextafter(x, 2.0);
        for (; k < 0; ++k) x = std::nextafter(x, -2.0);
        return x;
    };
    std::array<double, 4> best = v;
    long double best_defect = std::fabs(unit_defect(v));
    for (int i0 = -2; i0 <= 2; ++i0) {
        for (int i1 = -2; i1 <= 2; ++i1) {
            for (int i2 = -2; i2 <= 2; ++i2) {
                for (int i3 = -2; i3 <= 2; ++i3) {
                    const std::array<double, 4> c{nudged(v[0], i0), nudged(v[1], i1),
                                                  nudged(v[2], i2), nudged(v[3], i3)};
                    const long double d = std::fabs(unit_defect(c));
                    if (d < best_defect) {
                        best_defect = d;
                        best = c;
                    }
                }
            }
        }
    }
    return best;
}

}  // namespace

CoinMatrix make_coin(cplx a, cplx b)
{
    require_unit({a, b}, kInputNormTol, "coin (a, b)");
    const auto v = snap_to_unit({a.real(), a.imag(), b.real(), b.imag()});
    return CoinMatrix({v[0], v[1]}, {v[2], v[3]});
}

CoinMatrix hadamard_coin()
{
    const double r = 1.0 / std::sqrt(2.0);
    return make_coin({r, 0.0}, {r, 0.0});
}

CoinSplit split(const CoinMatrix& c)
{
    const cplx zero{0.0, 0.0};
    CoinSplit out;
    out.P = {{{c.a(), zero}, {-std::conj(c.b()), zero}}};
    out.Q = {{{zero, c.b()}, {zero, std::conj(c.a())}}};
    return out;
}

PolarParams polar(const CoinMatrix& c)
{
    if (c.degenerate()) {
        throw DegenerateCoin("polar decomposition needs a != 0 and b != 0");
    }
    const double s = std::abs(c.a());
    const double t = std::abs(c.b());
    return {s, t, c.a() / s, c.b() / t};
}

CoinMatrix coin_from_polar(const PolarParams& p)
{
    if (std::abs(std::abs(p.alpha) - 1.0) > kInternalNormTol ||
        std::abs(std::abs(p.beta) - 1.0) > kInternalNormTol) {
        throw NormViolation("polar phases must have unit modulus");
    }
    const cplx a = p.s * p.alpha;
    const cplx b = p.t * p.beta;
    require_unit({a, b}, kInternalNormTol, "coin from polar parameters");
    const auto v = snap_to_unit({a.real(), a.imag(), b.real(), b.imag()});
    return CoinMatrix({v[0], v[1]}, {v[2], v[3]});
}

Spinor psi_from_phi(const Spinor& phi, const PolarParams& p)
{
    require_unit(phi, kInputNormTol, "initial state phi");
    return {phi[0], -p.alpha * p.beta * phi[1]};
}

Spinor phi_from_psi(const Spinor& psi, const PolarParams& p)
{
    require_unit(psi, kInputNormTol, "initial state psi");
    return {psi[0], -std::conj(p.alpha) * std::conj(p.beta) * psi[1]};
}

}  // namespace qwalk
