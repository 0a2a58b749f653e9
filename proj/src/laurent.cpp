#include "qwalk/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace qwalk {

LaurentPoly::LaurentPoly(std::int64_t lo, std::vector<double> coeffs)
    : lo_(lo), c_(std::move(coeffs))
{
}

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, double c)
{
    return {exponent, {c}};
}

double LaurentPoly::coeff(std::int64_t x) const
{
    if (x < lo_ || x > hi()) {
        return 0.0;
    }
    return c_[static_cast<std::size_t>(x - lo_)];
}

cplx LaurentPoly::eval(cplx z) const
{
    if (c_.empty()) {
        return {0.0, 0.0};
    }
    cplx acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc * std::pow(z, static_cast<double>(lo_));
}

LaurentPoly LaurentPoly::shifted(std::int64_t k, double c) const
{
    std::vector<double> out(c_.size());
    std::transform(c_.begin(), c_.end(), out.begin(), [c](double v) { return c * v; });
    return {lo_ + k, std::move(out)};
}

namespace {

template <class Op>
LaurentPoly combine(const LaurentPoly& p, const LaurentPoly& q, Op op)
{
    if (p.empty() && q.empty()) {
        return {};
    }
    const std::int64_t lo = p.empty() ? q.lo() : (q.empty() ? p.lo() : std::min(p.lo(), q.lo()));
    const std::int64_t hi = p.empty() ? q.hi() : (q.empty() ? p.hi() : std::max(p.hi(), q.hi()));
    std::vector<double> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t x = lo; x <= hi; ++x) {
        c[static_cast<std::size_t>(x - lo)] = op(p.coeff(x), q.coeff(x));
    }
    return {lo, std::move(c)};
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q)
{
    return combine(p, q, [](double a, double b) { return a + b; });
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q)
{
    return combine(p, q, [](double a, double b) { return a - b; });
}

LaurentPoly operator*(double c, const LaurentPoly& p)
{
    return p.shifted(0, c);
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q)
{
    if (p.empty() || q.empty()) {
        return {};
    }
    std::vector<double> c(p.coeffs().size() + q.coeffs().size() - 1, 0.0);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
            c[i + j] += p.coeffs()[i] * q.coeffs()[j];
        }
    }
    return {p.lo() + q.lo(), std::move(c)};
}

double max_coeff_gap(const LaurentPoly& p, const LaurentPoly& q)
{
    const LaurentPoly d = p - q;
    double m = 0.0;
    for (double v : d.coeffs()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace qwalk
