#include "qwalk/limit_law.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/cheb_engine.hpp"
#include "qwalk/error.hpp"
#include "qwalk/quadrature.hpp"

namespace qwalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLambdaSlack = 1e-12;
constexpr double kAsymCrossCheck = 1e-10;

// Edge-singularity substitution y = s sin(theta) turns every limit integral
// over (-s, s) into a smooth one over (-pi/2, pi/2).
constexpr double kHalfPi = 0.5 * std::numbers::pi;

quad::Options limit_quad()
{
    quad::Options o;
    o.abs_tol = 1e-12;
    o.panels = 8;
    return o;
}

}  // namespace

LimitDensity make_limit_density(double s, double t, double lambda)
{
    require_polar_pair(s, t);
    if (!std::isfinite(lambda) || std::abs(lambda) > 1.0 / s + kLambdaSlack) {
        throw ParamViolation("|lambda| must not exceed 1/s, got " + std::to_string(lambda));
    }
    return {s, t, lambda};
}

double lambda_psi(const Spinor& psi, double s, double t)
{
    require_polar_pair(s, t);
    require_unit(psi, kInputNormTol, "initial state psi");
    return std::norm(psi[0]) - std::norm(psi[1]) +
           2.0 * (psi[0] * std::conj(psi[1])).real() * t / s;
}

double lambda_phi(const Spinor& phi, const CoinMatrix& c)
{
    if (c.degenerate()) {
        throw DegenerateCoin("lambda_phi needs a != 0 and b != 0");
    }
    require_unit(phi, kInputNormTol, "initial state phi");
    const cplx a = c.a();
    const cplx b = c.b();
    const cplx cross = a * b * std::conj(phi[0]) * phi[1] +
                       std::conj(a) * std::conj(b) * phi[0] * std::conj(phi[1]);
    if (std::abs(cross.imag()) >= 1e-12) {
        throw Error("lambda_phi: correction term is not real (imaginary part " +
                    std::to_string(cross.imag()) + ")");
    }
    return std::norm(phi[0]) - std::norm(phi[1]) - cross.real() / std::norm(a);
}

LimitDensity limit_density_for(const Spinor& phi, const CoinMatrix& c)
{
    const PolarParams p = polar(c);
    return make_limit_density(p.s, p.t, lambda_phi(phi, c));
}

double density(const LimitDensity& d, double y)
{
    if (!(std::abs(y) < d.s)) {
        return 0.0;
    }
    const double v = d.t * (1.0 + d.lambda * y) / (kPi * (1.0 - y * y) * std::sqrt(d.s * d.s - y * y));
    return std::max(v, 0.0);
}

double cdf(const LimitDensity& d, double y)
{
    if (y <= -d.s) {
        return 0.0;
    }
    if (y >= d.s) {
        return 1.0;
    }
    const double upper = std::asin(y / d.s);
    const double s = d.s;
    auto g = [&](double th) {
        const double u = s * std::sin(th);
        return d.t * (1.0 + d.lambda * u) / (kPi * (1.0 - u * u));
    };
    return std::clamp(quad::integrate<double>(g, -kHalfPi, upper, limit_quad()), 0.0, 1.0);
}

double limit_mean(const LimitDensity& d)
{
    const double s = d.s;
    auto g = [&](double th) {
        const double u = s * std::sin(th);
        return u * d.t * (1.0 + d.lambda * u) / (kPi * (1.0 - u * u));
    };
    return quad::integrate<double>(g, -kHalfPi, kHalfPi, limit_quad());
}

cplx limit_char_fn(const LimitDensity& d, double xi)
{
    const double s = d.s;
    auto g = [&](double th) {
        const double u = s * std::sin(th);
        return std::polar(1.0, xi * u) * ((1.0 + d.lambda * u) / (1.0 - u * u));
    };
    return (d.t / kPi) * quad::integrate<cplx>(g, -kHalfPi, kHalfPi, limit_quad());
}

std::size_t asym_nodes(std::int64_t n, std::int64_t k)
{
    return static_cast<std::size_t>(4 * n + 4 * std::abs(k) + 64);
}

namespace {

AsymValues asym_trapezoid(std::int64_t n, std::int64_t k, double xi, double s, std::size_t nodes,
                          Exec exec)
{
    const double nn = static_cast<double>(n);
    const cplx rot = std::polar(1.0, xi / nn);
    const double kk = static_cast<double>(k);

    // T_n(cos f) = cos(n f), U_{n-1}(cos f) = sin(n f) / sin f; |s cos| <= s < 1
    struct Cheb {
        double T;
        double U;
    };
    auto cheb = [nn](double x) {
        const double f = std::acos(x);
        return Cheb{std::cos(nn * f), std::sin(nn * f) / std::sin(f)};
    };
    auto make = [&](int which) {
        return [&, which](cplx z) {
            const Cheb rotated = cheb(s * (z * rot).real());
            const Cheb plain = cheb(s * z.real());
            const double lhs = (which == 0 || which == 1) ? rotated.T : rotated.U;
            const double rhs = (which == 0 || which == 2) ? plain.T : plain.U;
            return std::polar(lhs * rhs, kk * std::arg(z));
        };
    };
    auto mean = [&](auto f) {
        return exec == Exec::serial ? kernels::serial::circle_mean(nodes, f)
                                    : kernels::parallel::circle_mean(nodes, f);
    };
    return {mean(make(0)), mean(make(1)), mean(make(2)), mean(make(3))};
}

double max_gap(const AsymValues& a, const AsymValues& b)
{
    return std::max({std::abs(a.A - b.A), std::abs(a.B - b.B), std::abs(a.C - b.C),
                     std::abs(a.D - b.D)});
}

}  // namespace

AsymValues asym_integrals(std::int64_t n, std::int64_t k, double xi, double s, Exec exec)
{
    if (!(s > 0.0 && s < 1.0)) {
        throw ParamViolation("s must lie in (0, 1)");
    }
    if (n <= 0) {
        throw ParamViolation("asym_integrals needs n >= 1");
    }
    const std::size_t nodes = asym_nodes(n, k);
    const AsymValues v = asym_trapezoid(n, k, xi, s, nodes, exec);
    const AsymValues check = asym_trapezoid(n, k, xi, s, 2 * nodes, exec);
    const double gap = max_gap(v, check);
    if (!(gap <= kAsymCrossCheck)) {
        throw QuadratureFailure("asym_integrals(n=" + std::to_string(n) + ", k=" +
                                std::to_string(k) + "): node doubling moved result by " +
                                std::to_string(gap));
    }
    return v;
}

AsymValues asym_limits(std::int64_t k, double xi, double s)
{
    if (!(s > 0.0 && s < 1.0)) {
        throw ParamViolation("s must lie in (0, 1)");
    }
    const bool even = (k % 2) == 0;
    const double kk = static_cast<double>(k);
    // x = s sin(theta): Cos^{-1}(x/s) = pi/2 - theta, dx / sqrt(s^2 - x^2) = dtheta
    auto ek = [kk](double th) { return std::polar(1.0, kk * (kHalfPi - th)); };
    auto phase_arg = [xi, s](double th, double& r) {
        const double x = s * std::sin(th);
        r = std::sqrt(1.0 - x * x);
        return xi * s * std::cos(th) / r;
    };

    AsymValues v{};
    if (even) {
        auto fa = [&](double th) {
            double r = 0.0;
            const double a = phase_arg(th, r);
            return ek(th) * std::cos(a);
        };
        auto fd = [&](double th) {
            double r = 0.0;
            const double a = phase_arg(th, r);
            return ek(th) * (std::cos(a) / (r * r));
        };
        v.A = (2.0 / (4.0 * kPi)) * quad::integrate<cplx>(fa, -kHalfPi, kHalfPi, limit_quad());
        v.D = (2.0 / (4.0 * kPi)) * quad::integrate<cplx>(fd, -kHalfPi, kHalfPi, limit_quad());
    } else {
        auto fb = [&](double th) {
            double r = 0.0;
            const double a = phase_arg(th, r);
            return ek(th) * (std::sin(a) / r);
        };
        v.B = -(2.0 / (4.0 * kPi)) * quad::integrate<cplx>(fb, -kHalfPi, kHalfPi, limit_quad());
        v.C = -v.B;
    }
    return v;
}

double kolmogorov_distance(const Distribution& dist, double scale, const LimitDensity& limit,
                           Exec exec)
{
    // Only atoms with positive mass matter: between them F_n is flat and F is
    // monotone, so the supremum sits at an atom from the left or the right.
    std::vector<double> ys;
    std::vector<double> before;
    std::vector<double> after;
    double running = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double p = dist.probs[i];
        if (p == 0.0) {
            continue;
        }
        ys.push_back(static_cast<double>(dist.offset + static_cast<std::int64_t>(i)) / scale);
        before.push_back(running);
        running += p;
        after.push_back(running);
    }
    auto at = [&](std::size_t j) {
        const double f = cdf(limit, ys[j]);
        return std::max(std::abs(before[j] - f), std::abs(after[j] - f));
    };
    return exec == Exec::serial ? kernels::serial::max_over(ys.size(), at)
                                : kernels::parallel::max_over(ys.size(), at);
}

}  // namespace qwalk
