#pragma once

#include <array>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

/// Two-component chirality vector.
using Spinor = std::array<cplx, 2>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<std::array<cplx, 2>, 2>;

inline constexpr double kInputNormTol = 1e-10;
inline constexpr double kInternalNormTol = 1e-12;

struct PolarParams;

double norm_sq(const Spinor& u);
Spinor apply(const Mat2& m, const Spinor& u);

/// Special-unitary coin [[a, b], [-conj(b), conj(a)]].
///
/// Only constructible through make_coin() / coin_from_polar(), so every
/// instance satisfies |a|^2 + |b|^2 = 1 to within the input tolerance.
class CoinMatrix {
public:
    cplx a() const { return a_; }
    cplx b() const { return b_; }
    Mat2 matrix() const;
    bool degenerate() const { return a_ == 0.0 || b_ == 0.0; }

private:
    CoinMatrix(cplx a, cplx b) : a_(a), b_(b) {}
    friend CoinMatrix make_coin(cplx a, cplx b);
    friend CoinMatrix coin_from_polar(const PolarParams& p);

    cplx a_;
    cplx b_;
};

/// a = s*alpha, b = t*beta with s, t > 0 and |alpha| = |beta| = 1.
struct PolarParams {
    double s;
    double t;
    cplx alpha;
    cplx beta;
};

/// Right/left moving parts of the coin: coin = P + Q.
struct CoinSplit {
    Mat2 P;
    Mat2 Q;
};

/// Accepts |a|^2 + |b|^2 = 1 within kInputNormTol. The stored entries are
/// renormalised and then moved by at most two ulps each to the representable
/// pair closest to unit norm, which keeps long walks from drifting.
CoinMatrix make_coin(cplx a, cplx b);
CoinMatrix hadamard_coin();

CoinSplit split(const CoinMatrix& c);

/// Throws DegenerateCoin if a or b vanishes.
PolarParams polar(const CoinMatrix& c);

/// Rebuilds the coin from polar parameters (internal tolerance 1e-12).
CoinMatrix coin_from_polar(const PolarParams& p);

/// Maps a walk initial state phi to the algebraic-basis coordinates psi,
/// (phi1, phi2) -> (phi1, -alpha*beta*phi2).
Spinor psi_from_phi(const Spinor& phi, const PolarParams& p);

/// Inverse of psi_from_phi.
Spinor phi_from_psi(const Spinor& psi, const PolarParams& p);

/// Throws NormViolation unless |u| = 1 within tol.
void require_unit(const Spinor& u, double tol, const char* what);

}  // namespace qwalk
