#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// Real Laurent polynomial sum_k coeffs[k] z^(lo + k).
///
/// The stored exponent range may carry zero coefficients at either end;
/// coeff(x) is zero outside of it.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::int64_t lo, std::vector<double> coeffs);

    static LaurentPoly monomial(std::int64_t exponent, double c = 1.0);

    std::int64_t lo() const { return lo_; }
    /// lo() - 1 for the empty polynomial.
    std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(c_.size()) - 1; }
    bool empty() const { return c_.empty(); }
    std::span<const double> coeffs() const { return c_; }

    /// c_x: the coefficient of z^x.
    double coeff(std::int64_t x) const;

    /// Evaluates at z != 0.
    cplx eval(cplx z) const;

    /// Multiplication by c * z^k.
    LaurentPoly shifted(std::int64_t k, double c = 1.0) const;

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(double c, const LaurentPoly& p);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

private:
    std::int64_t lo_ = 0;
    std::vector<double> c_;
};

/// max_x |c_x(p) - c_x(q)|
double max_coeff_gap(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace qwalk
