#include "qwalk/algebra_check.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qwalk {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

namespace {

double max_abs(const MatrixXcd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// U(A) = P tau + Q tau^{-1} on Z_N: (U f)(x) = P f(x-1) + Q f(x+1).
MatrixXcd cyclic_walk(int N, const Mat2& P, const Mat2& Q)
{
    MatrixXcd U = MatrixXcd::Zero(2 * N, 2 * N);
    for (int x = 0; x < N; ++x) {
        const int left = (x - 1 + N) % N;
        const int right = (x + 1) % N;
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                U(2 * x + r, 2 * left + c) += P[r][c];
                U(2 * x + r, 2 * right + c) += Q[r][c];
            }
        }
    }
    return U;
}

std::string describe(const RelationReport& report, double tol)
{
    std::ostringstream os;
    os << "relations above tolerance " << tol << ":";
    for (const auto& name : report.failures(tol)) {
        os << ' ' << name << '=' << report.residuals.at(name);
    }
    return os.str();
}

VectorXcd seed(int N)
{
    VectorXcd e = VectorXcd::Zero(2 * N);
    e(0) = 1.0;
    return e;
}

}  // namespace

std::vector<std::string> RelationReport::failures(double tol) const
{
    std::vector<std::string> out;
    for (const auto& [name, r] : residuals) {
        if (!(r <= tol)) {
            out.push_back(name);
        }
    }
    return out;
}

double RelationReport::worst() const
{
    double w = 0.0;
    for (const auto& [name, r] : residuals) {
        w = std::max(w, r);
    }
    return w;
}

RelationFailure::RelationFailure(RelationReport report, double tol)
    : Error(describe(report, tol)), report_(std::move(report))
{
}

CyclicRep build_rep(int N, cplx alpha, cplx beta)
{
    if (N < 3) {
        throw ParamViolation("cyclic representation needs N >= 3");
    }
    if (std::abs(std::abs(alpha) - 1.0) > kInputNormTol ||
        std::abs(std::abs(beta) - 1.0) > kInputNormTol) {
        throw NormViolation("alpha and beta must have unit modulus");
    }
    const cplx zero{0.0, 0.0};
    // V_0 = diag(alpha, conj alpha): a = alpha, b = 0
    const Mat2 pv{{{alpha, zero}, {zero, zero}}};
    const Mat2 qv{{{zero, zero}, {zero, std::conj(alpha)}}};
    // W_0 = [[0, beta], [-conj beta, 0]]: a = 0, b = beta
    const Mat2 pw{{{zero, zero}, {-std::conj(beta), zero}}};
    const Mat2 qw{{{zero, beta}, {zero, zero}}};

    CyclicRep rep;
    rep.N = N;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.V = cyclic_walk(N, pv, qv);
    rep.W = cyclic_walk(N, pw, qw);
    rep.Sigma = MatrixXcd::Zero(2 * N, 2 * N);
    for (int x = 0; x < N; ++x) {
        rep.Sigma(2 * x, 2 * x) = 1.0;
        rep.Sigma(2 * x + 1, 2 * x + 1) = -1.0;
    }
    return rep;
}

Eigen::MatrixXcd shift_operator(const CyclicRep& rep)
{
    const MatrixXcd Vs = rep.V.adjoint();
    const MatrixXcd X = 0.5 * (rep.V + Vs);
    const MatrixXcd Y = (rep.V - Vs) / cplx(0.0, 2.0);
    return X + cplx(0.0, 1.0) * rep.Sigma * Y;
}

RelationReport relation_residuals(const CyclicRep& rep, double s, double t)
{
    const auto dim = 2 * rep.N;
    const MatrixXcd I = MatrixXcd::Identity(dim, dim);
    const cplx i{0.0, 1.0};
    const MatrixXcd& V = rep.V;
    const MatrixXcd& W = rep.W;
    const MatrixXcd& S = rep.Sigma;
    const MatrixXcd Vs = V.adjoint();
    const MatrixXcd Ws = W.adjoint();

    const MatrixXcd X = 0.5 * (V + Vs);
    const MatrixXcd Y = (V - Vs) / cplx(0.0, 2.0);
    const MatrixXcd T = X + i * S * Y;
    const MatrixXcd Ts = T.adjoint();
    const MatrixXcd pp = 0.5 * (I + S);
    const MatrixXcd pm = 0.5 * (I - S);
    const MatrixXcd eps = V * W;
    const MatrixXcd epss = eps.adjoint();

    const MatrixXcd x = s * X;
    const MatrixXcd y = s * Y;
    const MatrixXcd w = t * W;
    const MatrixXcd iyw = i * y + w;

    RelationReport r;
    auto& res = r.residuals;
    res["V unitary"] = max_abs(Vs * V - I);
    res["W unitary"] = max_abs(Ws * W - I);
    res["sigma unitary"] = max_abs(S.adjoint() * S - I);

    // axioms
    res["W^2 = -I"] = max_abs(W * W + I);
    res["VW = WV^-1"] = max_abs(V * W - W * Vs);
    res["sigma W + W sigma = 0"] = max_abs(S * W + W * S);
    res["sigma V - V sigma = 0"] = max_abs(S * V - V * S);
    res["sigma* = sigma"] = max_abs(S.adjoint() - S);

    // shift operator
    res["T*T = I"] = max_abs(Ts * T - I);
    res["TT* = I"] = max_abs(T * Ts - I);
    res["X^2 + Y^2 = I"] = max_abs(X * X + Y * Y - I);
    res["T = pi+ V + pi- V*"] = max_abs(T - (pp * V + pm * Vs));
    res["V = pi+ T + pi- T*"] = max_abs(V - (pp * T + pm * Ts));

    // eps = VW
    res["eps* = -eps"] = max_abs(epss + eps);
    res["eps* eps = I"] = max_abs(epss * eps - I);
    res["eps pi+ = pi- eps"] = max_abs(eps * pp - pm * eps);
    res["eps pi- = pi+ eps"] = max_abs(eps * pm - pp * eps);
    res["eps W = -V"] = max_abs(eps * W + V);
    res["W eps = -V*"] = max_abs(W * eps + Vs);
    res["eps V = V* eps"] = max_abs(eps * V - Vs * eps);
    res["eps sigma + sigma eps = 0"] = max_abs(eps * S + S * eps);

    // commutation relations
    res["XY = YX"] = max_abs(X * Y - Y * X);
    res["XW = WX"] = max_abs(X * W - W * X);
    res["YW + WY = 0"] = max_abs(Y * W + W * Y);
    res["VT = TV"] = max_abs(V * T - T * V);
    res["TW = WT"] = max_abs(T * W - W * T);
    res["X sigma = sigma X"] = max_abs(X * S - S * X);
    res["Y sigma = sigma Y"] = max_abs(Y * S - S * Y);
    res["T sigma = sigma T"] = max_abs(T * S - S * T);

    // U = x + (iy + w)
    res["x (iy+w) = (iy+w) x"] = max_abs(x * iyw - iyw * x);
    res["(iy+w)^2 = -(y^2 + t^2)"] = max_abs(iyw * iyw + (y * y + (t * t) * I));
    res["x^2 + y^2 + t^2 = I"] = max_abs(x * x + y * y + (t * t) * I - I);
    return r;
}

RelationReport verify_relations(const CyclicRep& rep, double s, double t, double tol)
{
    RelationReport r = relation_residuals(rep, s, t);
    if (!r.failures(tol).empty()) {
        throw RelationFailure(std::move(r), tol);
    }
    return r;
}

Eigen::VectorXcd basis_vector(const CyclicRep& rep, int component, std::int64_t x)
{
    const MatrixXcd T = shift_operator(rep);
    VectorXcd v = seed(rep.N);
    if (component == 2) {
        v = rep.V * (rep.W * v);
    }
    if (x >= 0) {
        for (std::int64_t k = 0; k < x; ++k) {
            v = T * v;
        }
    } else {
        const MatrixXcd Ts = T.adjoint();
        for (std::int64_t k = 0; k < -x; ++k) {
            v = Ts * v;
        }
    }
    return v;
}

CyclicBasis build_basis(const CyclicRep& rep)
{
    const MatrixXcd T = shift_operator(rep);
    CyclicBasis b;
    VectorXcd v1 = seed(rep.N);
    VectorXcd v2 = rep.V * (rep.W * v1);
    for (int x = 0; x < rep.N; ++x) {
        b.e1.push_back(v1);
        b.e2.push_back(v2);
        v1 = T * v1;
        v2 = T * v2;
    }
    return b;
}

double gram_residual(const CyclicBasis& basis)
{
    std::vector<const VectorXcd*> all;
    for (const auto& v : basis.e1) {
        all.push_back(&v);
    }
    for (const auto& v : basis.e2) {
        all.push_back(&v);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < all.size(); ++j) {
            const cplx g = all[i]->dot(*all[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double action_residual(const CyclicRep& rep, const CyclicBasis& basis)
{
    const MatrixXcd T = shift_operator(rep);
    const MatrixXcd Ts = T.adjoint();
    const int N = rep.N;
    auto e = [&](int comp, int x) -> VectorXcd {
        const auto& v = comp == 1 ? basis.e1 : basis.e2;
        if (x < 0) {
            return Ts * v[0];
        }
        if (x >= N) {
            return T * v[static_cast<std::size_t>(N - 1)];
        }
        return v[static_cast<std::size_t>(x)];
    };
    double worst = 0.0;
    auto track = [&](const VectorXcd& d) { worst = std::max(worst, d.cwiseAbs().maxCoeff()); };
    for (int x = 0; x < N; ++x) {
        track(rep.V * e(1, x) - e(1, x + 1));
        track(rep.V * e(2, x) - e(2, x - 1));
        track(rep.W * e(1, x) - e(2, x + 1));
        track(rep.W * e(2, x) + e(1, x - 1));
    }
    return worst;
}

double qwr_overlap(const CyclicRep& rep, int x)
{
    const VectorXcd e = seed(rep.N);
    VectorXcd v = e;
    for (int k = 0; k < x; ++k) {
        v = rep.V * v;
    }
    return std::abs(e.dot(v));
}

double qwr_check(const CyclicRep& rep)
{
    const VectorXcd e = seed(rep.N);
    VectorXcd v = e;
    double worst = 0.0;
    for (int x = 1; x < rep.N; ++x) {
        v = rep.V * v;
        worst = std::max(worst, std::abs(e.dot(v)));
    }
    return worst;
}

Distribution rep_distribution(const CyclicRep& rep, double s, double t, const Spinor& psi,
                              std::int64_t n)
{
    require_unit(psi, kInputNormTol, "initial state psi");
    if (n < 0 || 2 * n + 1 > rep.N) {
        throw ParamViolation("rep_distribution needs 0 <= n and 2n + 1 <= N");
    }
    const MatrixXcd U = s * rep.V + t * rep.W;
    const MatrixXcd T = shift_operator(rep);
    const MatrixXcd Ts = T.adjoint();

    const VectorXcd e1 = seed(rep.N);
    const VectorXcd e2 = rep.V * (rep.W * e1);
    VectorXcd state = psi[0] * e1 + psi[1] * e2;
    for (std::int64_t k = 0; k < n; ++k) {
        state = U * state;
    }

    Distribution d;
    d.offset = -n;
    d.probs.assign(static_cast<std::size_t>(2 * n + 1), 0.0);
    // walk outward from x = 0 in both directions
    VectorXcd up1 = e1, up2 = e2, down1 = e1, down2 = e2;
    for (std::int64_t x = 0; x <= n; ++x) {
        d.probs[static_cast<std::size_t>(x + n)] =
            std::norm(up1.dot(state)) + std::norm(up2.dot(state));
        if (x > 0) {
            d.probs[static_cast<std::size_t>(n - x)] =
                std::norm(down1.dot(state)) + std::norm(down2.dot(state));
        }
        up1 = T * up1;
        up2 = T * up2;
        down1 = Ts * down1;
        down2 = Ts * down2;
    }
    return d;
}

}  // namespace qwalk
