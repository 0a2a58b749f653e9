#include "doctest.h"

#include <cmath>
#include <random>

#include "qwalk/laurent.hpp"

using qwalk::cplx;
using qwalk::LaurentPoly;

TEST_CASE("coefficient access")
{
    const LaurentPoly p{-2, {1, 2, 3}};
    CHECK(p.lo() == -2);
    CHECK(p.hi() == 0);
    CHECK(p.coeff(-2) == 1);
    CHECK(p.coeff(0) == 3);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(-3) == 0);

    const LaurentPoly e;
    CHECK(e.empty());
    CHECK(e.hi() == e.lo() - 1);
    CHECK(e.coeff(0) == 0);
    CHECK(e.eval({0.3, 0.4}) == cplx(0, 0));
}

TEST_CASE("eval")
{
    const LaurentPoly p{-1, {1, 0, 1}};  // z + 1/z
    CHECK(std::abs(p.eval({1, 0}) - 2.0) < 1e-15);
    CHECK(std::abs(p.eval({0, 1})) < 1e-15);
    CHECK(std::abs(p.eval({2, 0}) - 2.5) < 1e-15);

    const LaurentPoly m = LaurentPoly::monomial(-3, 2.0);
    CHECK(std::abs(m.eval({0.5, 0}) - 16.0) < 1e-13);
}

TEST_CASE("arithmetic")
{
    const LaurentPoly p{-1, {1, 0, 1}};
    const LaurentPoly z = LaurentPoly::monomial(1);
    const LaurentPoly sum = p + z;
    CHECK(sum.coeff(1) == 2);
    CHECK(sum.coeff(-1) == 1);

    const LaurentPoly diff = p - p;
    for (std::int64_t x = -1; x <= 1; ++x) {
        CHECK(diff.coeff(x) == 0);
    }

    const LaurentPoly sq = p * p;  // z^2 + 2 + z^-2
    CHECK(sq.lo() == -2);
    CHECK(sq.hi() == 2);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(1) == 0);
    CHECK(sq.coeff(-2) == 1);

    const LaurentPoly sh = p.shifted(2, -3.0);
    CHECK(sh.coeff(3) == -3);
    CHECK(sh.coeff(1) == -3);
    CHECK(sh.coeff(2) == 0);

    CHECK((0.5 * p).coeff(-1) == 0.5);
    CHECK(((LaurentPoly{}) + p).coeff(1) == 1);
    CHECK((p * LaurentPoly{}).empty());
}

TEST_CASE("products agree with pointwise evaluation")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(1 + trial % 7), b(1 + trial % 5);
        for (auto& v : a) v = u(rng);
        for (auto& v : b) v = u(rng);
        const LaurentPoly p{-(trial % 4), a};
        const LaurentPoly q{trial % 3 - 1, b};
        const cplx z = std::polar(1.0, u(rng) * 3.0);
        CHECK(std::abs((p * q).eval(z) - p.eval(z) * q.eval(z)) < 1e-12);
        CHECK(std::abs((p + q).eval(z) - p.eval(z) - q.eval(z)) < 1e-12);
    }
}

TEST_CASE("max_coeff_gap")
{
    const LaurentPoly p{-1, {1, 0, 1}};
    const LaurentPoly q{0, {0.5, 1.0}};
    CHECK(qwalk::max_coeff_gap(p, q) == 1.0);
    CHECK(qwalk::max_coeff_gap(p, p) == 0.0);
    CHECK(qwalk::max_coeff_gap(p, LaurentPoly{}) == 1.0);
}
