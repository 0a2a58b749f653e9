#pragma once

// Finite cyclic realisation of the walk algebra: unitaries V, W, sigma on
// l^2(Z_N) (x) C^2 satisfying
//   W^2 = -I,  VW = WV^{-1},  sigma W + W sigma = sigma V - V sigma = 0,  sigma* = sigma,
// together with residual checks for every identity derived from them.
// Vectors are laid out site-major, component-minor: index 2x + c.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/coin.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

struct CyclicRep {
    int N = 0;
    cplx alpha;
    cplx beta;
    Eigen::MatrixXcd V;
    Eigen::MatrixXcd W;
    Eigen::MatrixXcd Sigma;
};

/// Identity name -> max-abs entry of LHS - RHS.
struct RelationReport {
    std::map<std::string, double> residuals;

    std::vector<std::string> failures(double tol) const;
    double worst() const;
};

class RelationFailure : public Error {
public:
    RelationFailure(RelationReport report, double tol);
    const RelationReport& report() const { return report_; }

private:
    RelationReport report_;
};

/// V = U(diag(alpha, conj alpha)), W = U([[0, beta], [-conj beta, 0]]) with
/// the shift taken cyclically on Z_N; Sigma = diag(1, -1) per site. N >= 3.
CyclicRep build_rep(int N, cplx alpha, cplx beta);

/// Residuals of every axiom and derived identity. s, t enter only the
/// x = sX, y = sY, w = tW relations.
RelationReport relation_residuals(const CyclicRep& rep, double s, double t);

/// relation_residuals() that throws RelationFailure when any exceeds tol.
RelationReport verify_relations(const CyclicRep& rep, double s, double t, double tol);

/// T = X + i sigma Y with X = (V + V*)/2, Y = (V - V*)/2i.
Eigen::MatrixXcd shift_operator(const CyclicRep& rep);

/// e_1^x = T^x e and e_2^x = T^x eps e for x in [0, N), seed e = delta_0 (x) (1, 0).
struct CyclicBasis {
    std::vector<Eigen::VectorXcd> e1;
    std::vector<Eigen::VectorXcd> e2;
};

CyclicBasis build_basis(const CyclicRep& rep);

/// T^x e_i^0 for any integer x (negative powers through T*).
Eigen::VectorXcd basis_vector(const CyclicRep& rep, int component, std::int64_t x);

/// max-abs entry of Gram(e_1^0..e_1^{N-1}, e_2^0..e_2^{N-1}) - I.
double gram_residual(const CyclicBasis& basis);

/// Largest violation of V e1^x = e1^{x+1}, V e2^x = e2^{x-1}, W e1^x = e2^{x+1},
/// W e2^x = -e1^{x-1} over x in [0, N), with e_i^{x} taken as T^x e_i^0 so
/// that wrapping past N carries the phase alpha^{+-N}.
double action_residual(const CyclicRep& rep, const CyclicBasis& basis);

/// max over 0 < x < N of |<V^x e, e>|.
double qwr_check(const CyclicRep& rep);

/// |<V^x e, e>| for one x (x = N wraps to modulus 1).
double qwr_overlap(const CyclicRep& rep, int x);

/// q_n(psi; x) computed inside the cyclic representation with U = sV + tW.
/// Requires 2n + 1 <= N so that no site is visited twice.
Distribution rep_distribution(const CyclicRep& rep, double s, double t, const Spinor& psi,
                              std::int64_t n);

}  // namespace qwalk
