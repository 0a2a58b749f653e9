#include "qwalk/cheb_engine.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

void require_open_unit(double s, const char* name)
{
    if (!(s > 0.0 && s < 1.0)) {
        throw ParamViolation(std::string(name) + " must lie in (0, 1), got " + std::to_string(s));
    }
}

// Centred coefficient vector of size 2k+1 read at exponent x; zero outside.
double centred(const std::vector<double>& v, std::int64_t x)
{
    const auto half = (static_cast<std::int64_t>(v.size()) - 1) / 2;
    if (v.empty() || x < -half || x > half) {
        return 0.0;
    }
    return v[static_cast<std::size_t>(x + half)];
}

LaurentPoly as_poly(const std::vector<double>& v)
{
    const auto half = (static_cast<std::int64_t>(v.size()) - 1) / 2;
    return {-half, v};
}

void recurrence_step(const std::vector<double>& cur, const std::vector<double>& prev, double s,
                     std::vector<double>& out, Exec exec)
{
    out.assign(cur.size() + 2, 0.0);
    if (exec == Exec::serial) {
        kernels::serial::chebyshev_step(cur, prev, s, out);
    } else {
        kernels::parallel::chebyshev_step(cur, prev, s, out);
    }
}

// (T_{k}, T_{k-1}) -> (T_{k+1}, T_k)
void advance_T(std::vector<double>& cur, std::vector<double>& prev, std::vector<double>& scratch,
               double s, Exec exec)
{
    if (cur.size() == 1) {
        prev = cur;
        cur = {0.5 * s, 0.0, 0.5 * s};
        return;
    }
    recurrence_step(cur, prev, s, scratch, exec);
    std::swap(prev, cur);
    std::swap(cur, scratch);
}

// (U_{m}, U_{m-1}) -> (U_{m+1}, U_m); U_{-1} is the empty vector.
void advance_U(std::vector<double>& cur, std::vector<double>& prev, std::vector<double>& scratch,
               double s, Exec exec)
{
    if (cur.empty()) {
        cur = {1.0};
        return;
    }
    recurrence_step(cur, prev, s, scratch, exec);
    std::swap(prev, cur);
    std::swap(cur, scratch);
}

}  // namespace

double TransferQuadruple::p_mass() const
{
    double acc = 0.0;
    for (std::int64_t x = -n; x <= n; ++x) {
        acc += p1.coeff(x) * p1.coeff(x) + p2.coeff(x) * p2.coeff(x);
    }
    return acc;
}

double TransferQuadruple::q_mass() const
{
    double acc = 0.0;
    for (std::int64_t x = -n; x <= n; ++x) {
        acc += q1.coeff(x) * q1.coeff(x) + q2.coeff(x) * q2.coeff(x);
    }
    return acc;
}

LaurentPoly cheb_T_laurent(std::int64_t n, double s, Exec exec)
{
    require_open_unit(s, "s");
    if (n < 0) {
        throw ParamViolation("Chebyshev degree must be non-negative");
    }
    std::vector<double> cur{1.0};
    std::vector<double> prev;
    std::vector<double> scratch;
    for (std::int64_t k = 0; k < n; ++k) {
        advance_T(cur, prev, scratch, s, exec);
    }
    return as_poly(cur);
}

LaurentPoly cheb_U_laurent(std::int64_t m, double s, Exec exec)
{
    require_open_unit(s, "s");
    if (m < -1) {
        throw ParamViolation("Chebyshev U index must be >= -1");
    }
    std::vector<double> cur;
    std::vector<double> prev;
    std::vector<double> scratch;
    for (std::int64_t k = -1; k < m; ++k) {
        advance_U(cur, prev, scratch, s, exec);
    }
    if (cur.empty()) {
        return {};
    }
    return as_poly(cur);
}

void require_polar_pair(double s, double t)
{
    require_open_unit(s, "s");
    require_open_unit(t, "t");
    if (std::abs(s * s + t * t - 1.0) > kParamTol) {
        throw ParamViolation("s^2 + t^2 must equal 1");
    }
}

TransferSequence::TransferSequence(double s, double t, Exec exec)
    : s_(s), t_(t), exec_(exec), t_cur_{1.0}
{
    require_polar_pair(s, t);
}

void TransferSequence::advance()
{
    advance_T(t_cur_, t_prev_, scratch_, s_, exec_);
    advance_U(u_cur_, u_prev_, scratch_, s_, exec_);
    ++n_;
}

LaurentPoly TransferSequence::chebyshev_T() const
{
    return as_poly(t_cur_);
}

LaurentPoly TransferSequence::chebyshev_U() const
{
    if (u_cur_.empty()) {
        return {};
    }
    return as_poly(u_cur_);
}

TransferQuadruple TransferSequence::quadruple() const
{
    const std::int64_t n = n_;
    const auto size = static_cast<std::size_t>(2 * n + 1);
    std::vector<double> p1(size), p2(size), q1(size), q2(size);
    const double hs = 0.5 * s_;
    for (std::int64_t x = -n; x <= n; ++x) {
        const auto i = static_cast<std::size_t>(x + n);
        const double tx = centred(t_cur_, x);
        const double ul = centred(u_cur_, x - 1);
        const double ur = centred(u_cur_, x + 1);
        const double odd = hs * (ul - ur);
        p1[i] = tx + odd;
        p2[i] = t_ * ul;
        q1[i] = -t_ * ur;
        q2[i] = tx - odd;
    }
    return {n, {-n, std::move(p1)}, {-n, std::move(p2)}, {-n, std::move(q1)}, {-n, std::move(q2)}};
}

TransferQuadruple transfer_polys(std::int64_t n, double s, double t, Exec exec)
{
    if (n < 0) {
        throw ParamViolation("step count must be non-negative");
    }
    TransferSequence seq(s, t, exec);
    for (std::int64_t k = 0; k < n; ++k) {
        seq.advance();
    }
    return seq.quadruple();
}

Distribution qn_distribution(const Spinor& psi, const TransferQuadruple& tq)
{
    require_unit(psi, kInputNormTol, "initial state psi");
    const double w1 = std::norm(psi[0]);
    const double w2 = std::norm(psi[1]);
    const double w12 = 2.0 * (psi[0] * std::conj(psi[1])).real();
    Distribution d;
    d.offset = -tq.n;
    d.probs.resize(static_cast<std::size_t>(2 * tq.n + 1));
    for (std::int64_t x = -tq.n; x <= tq.n; ++x) {
        const double a1 = tq.p1.coeff(x);
        const double a2 = tq.p2.coeff(x);
        const double b1 = tq.q1.coeff(x);
        const double b2 = tq.q2.coeff(x);
        d.probs[static_cast<std::size_t>(x + tq.n)] =
            w1 * (a1 * a1 + a2 * a2) + w2 * (b1 * b1 + b2 * b2) + w12 * (a1 * b1 + a2 * b2);
    }
    return d;
}

Distribution qn_distribution(const Spinor& psi, std::int64_t n, double s, double t)
{
    require_unit(psi, kInputNormTol, "initial state psi");
    return qn_distribution(psi, transfer_polys(n, s, t));
}

std::size_t default_cross_nodes(const LaurentPoly& p, const LaurentPoly& q)
{
    if (p.empty() || q.empty()) {
        return 16;
    }
    // exponents of p(wz) q(1/z) run over [p.lo - q.hi, p.hi - q.lo]
    const std::int64_t band = std::max(std::abs(p.lo() - q.hi()), std::abs(p.hi() - q.lo()));
    return std::bit_ceil(static_cast<std::size_t>(2 * band + 16));
}

CrossSeriesResult cross_series_both(const LaurentPoly& p, const LaurentPoly& q, cplx w,
                                    std::size_t nodes, Exec exec)
{
    if (std::abs(std::abs(w) - 1.0) > kParamTol) {
        throw ParamViolation("cross_series needs |w| = 1");
    }
    CrossSeriesResult r;
    r.nodes = nodes == 0 ? default_cross_nodes(p, q) : nodes;

    r.coefficient_side = {0.0, 0.0};
    if (!p.empty() && !q.empty()) {
        const std::int64_t lo = std::max(p.lo(), q.lo());
        const std::int64_t hi = std::min(p.hi(), q.hi());
        for (std::int64_t x = lo; x <= hi; ++x) {
            r.coefficient_side += p.coeff(x) * q.coeff(x) * std::pow(w, static_cast<double>(x));
        }
    }

    auto integrand = [&](cplx z) { return p.eval(w * z) * q.eval(std::conj(z)); };
    r.quadrature_side = exec == Exec::serial ? kernels::serial::circle_mean(r.nodes, integrand)
                                             : kernels::parallel::circle_mean(r.nodes, integrand);
    return r;
}

cplx cross_series(const LaurentPoly& p, const LaurentPoly& q, cplx w, std::size_t nodes)
{
    const CrossSeriesResult r = cross_series_both(p, q, w, nodes);
    const double gap = std::abs(r.coefficient_side - r.quadrature_side);
    if (!(gap <= kCrossDivergenceTol)) {
        throw QuadratureDivergence("coefficient and contour sides differ by " +
                                   std::to_string(gap) + " with " + std::to_string(r.nodes) +
                                   " nodes");
    }
    return r.coefficient_side;
}

CharFnComponents char_fn_components(const Spinor& psi, const TransferQuadruple& tq, double xi)
{
    require_unit(psi, kInputNormTol, "initial state psi");
    const auto size = static_cast<std::size_t>(2 * tq.n + 1);
    std::vector<double> wp(size), wq(size), wr(size);
    for (std::int64_t x = -tq.n; x <= tq.n; ++x) {
        const auto i = static_cast<std::size_t>(x + tq.n);
        const double a1 = tq.p1.coeff(x);
        const double a2 = tq.p2.coeff(x);
        const double b1 = tq.q1.coeff(x);
        const double b2 = tq.q2.coeff(x);
        wp[i] = a1 * a1 + a2 * a2;
        wq[i] = b1 * b1 + b2 * b2;
        wr[i] = a1 * b1 + a2 * b2;
    }
    CharFnComponents c;
    c.P = kernels::parallel::phase_sum(wp, -tq.n, xi);
    c.Q = kernels::parallel::phase_sum(wq, -tq.n, xi);
    c.R = kernels::parallel::phase_sum(wr, -tq.n, xi);
    const double w12 = 2.0 * (psi[0] * std::conj(psi[1])).real();
    c.E = std::norm(psi[0]) * c.P + std::norm(psi[1]) * c.Q + w12 * c.R;
    return c;
}

CharFnComponents char_fn_components(const Spinor& psi, std::int64_t n, double s, double t,
                                    double xi)
{
    return char_fn_components(psi, transfer_polys(n, s, t), xi);
}

}  // namespace qwalk
