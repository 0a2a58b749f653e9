#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qwalk/cheb_engine.hpp"
#include "qwalk/error.hpp"
#include "qwalk/limit_law.hpp"

using namespace qwalk;

namespace {
const double r2 = 1.0 / std::sqrt(2.0);
const double pi = std::numbers::pi;

// Reference values computed offline with mpmath (50 digits, tanh-sinh
// quadrature) for s = t = 1/sqrt(2).
constexpr double kCharFnXi05 = 0.96368965529932600699;
constexpr double kCharFnXi1 = 0.8583229252324153721;
constexpr double kCharFnXi2 = 0.4873338269900125812;
constexpr double kCharFnImXi05Lam1 = 0.14404045613179667153;
constexpr double kCharFnImXi1Lam1 = 0.27395129765047938592;
constexpr double kCharFnImXi2Lam1 = 0.4437012750310543765;
}  // namespace

TEST_CASE("lambda_psi examples")
{
    CHECK(lambda_psi({cplx(1, 0), cplx(0, 0)}, 0.6, 0.8) == 1.0);
    CHECK(std::abs(lambda_psi({cplx(r2, 0), cplx(0, r2)}, 0.6, 0.8)) < 1e-15);
    CHECK(std::abs(lambda_psi({cplx(r2, 0), cplx(r2, 0)}, r2, r2) - 1.0) < 1e-15);
    CHECK_THROWS_AS(lambda_psi({cplx(1, 0), cplx(0, 0)}, 0.6, 0.7), ParamViolation);
}

TEST_CASE("lambda_phi examples")
{
    const CoinMatrix h = hadamard_coin();
    CHECK(std::abs(lambda_phi({cplx(r2, 0), cplx(0, r2)}, h)) < 1e-15);
    CHECK(std::abs(lambda_phi({cplx(1, 0), cplx(0, 0)}, h) - 1.0) < 1e-15);
    CHECK_THROWS_AS(lambda_phi({cplx(1, 0), cplx(0, 0)}, make_coin({1, 0}, {0, 0})),
                    DegenerateCoin);
}

TEST_CASE("lambda_phi and lambda_psi agree; density stays non-negative")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 10000; ++trial) {
        const CoinMatrix c = oracle::random_coin(rng);
        const PolarParams pp = polar(c);
        const Spinor phi = oracle::random_unit(rng);
        const double lp = lambda_phi(phi, c);
        const double ls = lambda_psi(psi_from_phi(phi, pp), pp.s, pp.t);
        REQUIRE(std::abs(lp - ls) < 1e-12);
        REQUIRE(std::abs(ls) <= 1.0 / pp.s + 1e-12);
        const LimitDensity d = make_limit_density(pp.s, pp.t, ls);
        for (double f : {-0.999, -0.5, 0.0, 0.5, 0.999}) {
            const double y = f * pp.s;
            const double raw = pp.t * (1 + ls * y) / (pi * (1 - y * y) * std::sqrt(pp.s * pp.s - y * y));
            REQUIRE(raw >= -1e-12);
            REQUIRE(density(d, y) >= 0.0);
        }
    }
}

TEST_CASE("make_limit_density validation")
{
    CHECK_NOTHROW(make_limit_density(0.5, std::sqrt(0.75), 2.0));
    CHECK_THROWS_AS(make_limit_density(0.5, std::sqrt(0.75), 2.01), ParamViolation);
    CHECK_THROWS_AS(make_limit_density(0.5, 0.5, 0.0), ParamViolation);
}

TEST_CASE("density examples")
{
    const LimitDensity d = make_limit_density(r2, r2, 0.0);
    CHECK(std::abs(density(d, 0.0) - 1.0 / pi) < 1e-15);
    CHECK(density(d, r2) == 0.0);
    CHECK(density(d, -0.8) == 0.0);
    for (double y : {0.1, 0.3, 0.7}) {
        CHECK(density(d, y) == doctest::Approx(density(d, -y)).epsilon(1e-15));
    }
}

TEST_CASE("cdf matches the closed-form antiderivative")
{
    for (double lam : {-1.0, 0.0, 0.4, 1.0}) {
        const LimitDensity d = make_limit_density(r2, r2, lam);
        CHECK(cdf(d, -1.0) == 0.0);
        CHECK(cdf(d, r2) == 1.0);
        // the whole theta range integrates to one
        CHECK(std::abs(cdf(d, std::nextafter(r2, 0.0)) - 1.0) < 1e-7);
        CHECK(std::abs(cdf(d, r2 * (1 - 1e-12)) -
                       oracle::closed_form_cdf(r2, r2, lam, r2 * (1 - 1e-12))) < 1e-11);
        double prev = 0.0;
        for (int j = -50; j <= 50; ++j) {
            const double y = r2 * j / 50.5;
            const double f = cdf(d, y);
            CHECK(std::abs(f - oracle::closed_form_cdf(r2, r2, lam, y)) < 1e-11);
            CHECK(f >= prev);
            prev = f;
        }
    }
    CHECK(std::abs(cdf(make_limit_density(r2, r2, 0.0), 0.0) - 0.5) < 1e-12);
    CHECK(std::abs(cdf(make_limit_density(0.3, std::sqrt(0.91), 2.5), 0.1) -
                   oracle::closed_form_cdf(0.3, std::sqrt(0.91), 2.5, 0.1)) < 1e-11);
}

TEST_CASE("limit mean")
{
    CHECK(std::abs(limit_mean(make_limit_density(r2, r2, 0.0))) < 1e-13);
    // lambda * (1 - t) in closed form
    CHECK(std::abs(limit_mean(make_limit_density(r2, r2, 1.0)) - (1.0 - r2)) < 1e-12);
    const double s = 0.4;
    const double t = std::sqrt(1 - s * s);
    CHECK(std::abs(limit_mean(make_limit_density(s, t, -1.5)) + 1.5 * (1.0 - t)) < 1e-12);
}

TEST_CASE("limit_char_fn")
{
    const LimitDensity d0 = make_limit_density(r2, r2, 0.0);
    const LimitDensity d1 = make_limit_density(r2, r2, 1.0);
    CHECK(std::abs(limit_char_fn(d0, 0.0) - 1.0) < 1e-12);
    CHECK(std::abs(limit_char_fn(d1, 0.0) - 1.0) < 1e-12);

    CHECK(std::abs(limit_char_fn(d0, 0.5) - kCharFnXi05) < 1e-12);
    CHECK(std::abs(limit_char_fn(d0, 1.0) - kCharFnXi1) < 1e-12);
    CHECK(std::abs(limit_char_fn(d0, 2.0) - kCharFnXi2) < 1e-12);
    // lambda only adds an odd, purely imaginary part
    CHECK(std::abs(limit_char_fn(d1, 0.5) - cplx(kCharFnXi05, kCharFnImXi05Lam1)) < 1e-12);
    CHECK(std::abs(limit_char_fn(d1, 1.0) - cplx(kCharFnXi1, kCharFnImXi1Lam1)) < 1e-12);
    CHECK(std::abs(limit_char_fn(d1, 2.0) - cplx(kCharFnXi2, kCharFnImXi2Lam1)) < 1e-12);

    for (double xi : {0.3, 1.7, 4.0, 9.0}) {
        CHECK(std::abs(limit_char_fn(d0, xi).imag()) < 1e-12);
        CHECK(std::abs(std::conj(limit_char_fn(d1, xi)) - limit_char_fn(d1, -xi)) < 1e-10);
        CHECK(std::abs(limit_char_fn(d1, xi) - oracle::periodic_char_fn(r2, r2, 1.0, xi)) < 1e-11);
    }
}

TEST_CASE("asym_limits")
{
    const AsymValues z = asym_limits(0, 0.0, r2);
    CHECK(std::abs(z.A - 0.5) < 1e-12);
    CHECK(std::abs(z.D - r2) < 1e-12);
    CHECK(z.B == cplx(0, 0));
    CHECK(z.C == cplx(0, 0));

    const AsymValues a = asym_limits(0, 1.0, r2);
    CHECK(std::abs(a.A - 0.42916146261620769) < 1e-12);
    CHECK(std::abs(a.D - 0.62144250462168598) < 1e-12);

    const AsymValues b = asym_limits(1, 1.0, r2);
    CHECK(a.A != cplx(0, 0));
    CHECK(b.A == cplx(0, 0));
    CHECK(b.D == cplx(0, 0));
    CHECK(std::abs(b.B - cplx(0, -0.19371282028350828)) < 1e-12);
    CHECK(b.C == -b.B);

    const AsymValues c = asym_limits(2, 1.0, r2);
    CHECK(std::abs(c.A - 0.028980298239934706) < 1e-12);
    CHECK(std::abs(c.D - 0.1476816634002272) < 1e-12);
    const AsymValues c0 = asym_limits(2, 0.0, r2);
    CHECK(std::abs(c0.A) < 1e-12);
    CHECK(std::abs(c0.D - 0.12132034355964257) < 1e-12);

    CHECK_THROWS_AS(asym_limits(0, 1.0, 1.0), ParamViolation);
}

TEST_CASE("asym_integrals: parity, node count and approach to the limit")
{
    CHECK(asym_nodes(10, -3) == 40 + 12 + 64);
    for (std::int64_t k : {0, 1, 2, 3}) {
        for (double xi : {0.0, 1.0}) {
            const AsymValues v = asym_integrals(150, k, xi, r2);
            if (k % 2 != 0) {
                CHECK(std::abs(v.A) < 1e-10);
                CHECK(std::abs(v.D) < 1e-10);
            } else {
                CHECK(std::abs(v.B) < 1e-10);
                CHECK(std::abs(v.C) < 1e-10);
            }
        }
    }

    // A_{n,0}(0) is the mean of T_n(s cos)^2 over the circle
    const int n = 200;
    double direct = 0.0;
    const int m = 8192;
    for (int j = 0; j < m; ++j) {
        const double v = std::cos(n * std::acos(r2 * std::cos(2 * pi * j / m)));
        direct += v * v;
    }
    CHECK(std::abs(asym_integrals(n, 0, 0.0, r2).A - direct / m) < 1e-12);

    const AsymValues lim = asym_limits(1, 1.0, r2);
    const AsymValues small = asym_integrals(200, 1, 1.0, r2);
    const AsymValues large = asym_integrals(2000, 1, 1.0, r2);
    CHECK(std::abs(large.B - lim.B) < std::abs(small.B - lim.B));
    CHECK(std::abs(large.B + large.C) < std::abs(small.B + small.C) + 1e-12);

    const AsymValues ser = asym_integrals(300, 2, 1.0, r2, Exec::serial);
    const AsymValues par = asym_integrals(300, 2, 1.0, r2, Exec::parallel);
    CHECK(std::abs(ser.A - par.A) < 1e-13);
    CHECK(std::abs(ser.D - par.D) < 1e-13);

    CHECK_THROWS_AS(asym_integrals(0, 0, 1.0, r2), ParamViolation);
}

TEST_CASE("kolmogorov_distance")
{
    const LimitDensity d = make_limit_density(r2, r2, 0.0);
    // a point mass at 0 is half a unit away from a symmetric continuous CDF
    Distribution point;
    point.offset = 0;
    point.probs = {1.0};
    CHECK(std::abs(kolmogorov_distance(point, 1.0, d) - 0.5) < 1e-12);

    const CoinMatrix h = hadamard_coin();
    const Spinor phi{cplx(r2, 0), cplx(0, r2)};
    const Distribution dist = qn_distribution(psi_from_phi(phi, polar(h)), 400, r2, r2);
    const double ks = kolmogorov_distance(dist, 400.0, d, Exec::serial);
    CHECK(ks == doctest::Approx(kolmogorov_distance(dist, 400.0, d, Exec::parallel)));
    CHECK(ks < 0.1);
    CHECK(ks > 0.0);
}
