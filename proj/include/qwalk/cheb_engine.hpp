#pragma once

// Closed-form walk distributions from the Chebyshev expansion
//   U^n = T_n(x) + U_{n-1}(x) (iy + w)
// with x acting as s(z + 1/z)/2 on Laurent coefficients. Independent of
// direct_walk: nothing here touches lattice amplitudes.

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/kernels.hpp"
#include "qwalk/laurent.hpp"

namespace qwalk {

inline constexpr double kParamTol = 1e-10;
inline constexpr double kCrossDivergenceTol = 1e-6;

/// Matrix elements of U^n in the basis e_1^x, e_2^x:
///   U^n e_1 = p1(T) e_1 + p2(T) e_2,   U^n e_2 = q1(T) e_1 + q2(T) e_2.
struct TransferQuadruple {
    std::int64_t n = 0;
    LaurentPoly p1;
    LaurentPoly p2;
    LaurentPoly q1;
    LaurentPoly q2;

    /// sum_x c_x(p1)^2 + c_x(p2)^2
    double p_mass() const;
    /// sum_x c_x(q1)^2 + c_x(q2)^2
    double q_mass() const;
};

/// T_n(s(z + 1/z)/2) via the three-term recurrence. Requires 0 < s < 1.
LaurentPoly cheb_T_laurent(std::int64_t n, double s, Exec exec = Exec::parallel);

/// U_m(s(z + 1/z)/2) for m >= -1 (U_{-1} = 0).
LaurentPoly cheb_U_laurent(std::int64_t m, double s, Exec exec = Exec::parallel);

/// Throws ParamViolation unless 0 < s, t < 1 and s^2 + t^2 = 1.
void require_polar_pair(double s, double t);

/// The four transfer polynomials at step n >= 0.
TransferQuadruple transfer_polys(std::int64_t n, double s, double t, Exec exec = Exec::parallel);

/// Steps (T_n, U_{n-1}) forward one n at a time, O(n) work per step.
class TransferSequence {
public:
    TransferSequence(double s, double t, Exec exec = Exec::parallel);

    std::int64_t n() const { return n_; }
    void advance();
    TransferQuadruple quadruple() const;

    /// T_n, centred coefficients on [-n, n].
    LaurentPoly chebyshev_T() const;
    /// U_{n-1}, centred coefficients on [-(n-1), n-1].
    LaurentPoly chebyshev_U() const;

private:
    double s_;
    double t_;
    Exec exec_;
    std::int64_t n_ = 0;
    std::vector<double> t_prev_;
    std::vector<double> t_cur_;
    std::vector<double> u_prev_;
    std::vector<double> u_cur_;
    std::vector<double> scratch_;
};

/// q_n(psi; x) from the transfer quadruple.
Distribution qn_distribution(const Spinor& psi, const TransferQuadruple& tq);
Distribution qn_distribution(const Spinor& psi, std::int64_t n, double s, double t);

struct CrossSeriesResult {
    cplx coefficient_side;
    cplx quadrature_side;
    std::size_t nodes = 0;
};

/// Node count for the circle quadrature: 2 * bandwidth + 16, rounded up to a
/// power of two, where the bandwidth is the largest |exponent| of p(wz) q(1/z).
std::size_t default_cross_nodes(const LaurentPoly& p, const LaurentPoly& q);

/// Both sides of sum_x c_x(p) c_x(q) w^x = (1/2 pi i) \oint p(wz) q(1/z) dz/z
/// without comparing them. nodes == 0 picks default_cross_nodes().
CrossSeriesResult cross_series_both(const LaurentPoly& p, const LaurentPoly& q, cplx w,
                                    std::size_t nodes = 0, Exec exec = Exec::parallel);

/// Coefficient-side value; throws QuadratureDivergence if the contour side
/// differs by more than 1e-6.
cplx cross_series(const LaurentPoly& p, const LaurentPoly& q, cplx w, std::size_t nodes = 0);

/// Bracketed sums of the characteristic function and their psi-weighted total.
struct CharFnComponents {
    cplx P;  // P^1 + P^2
    cplx Q;  // Q^1 + Q^2
    cplx R;  // R^1 + R^2
    cplx E;
};

CharFnComponents char_fn_components(const Spinor& psi, const TransferQuadruple& tq, double xi);
CharFnComponents char_fn_components(const Spinor& psi, std::int64_t n, double s, double t,
                                    double xi);

}  // namespace qwalk
