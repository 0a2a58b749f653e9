// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
// Pinned convergence thresholds are read from configs/ (default.json for the
// symmetric Hadamard walk, hadamard_biased.json for phi = (1, 0)); they already
// include the 1.1 safety factor.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qwalk/algebra_check.hpp"
#include "qwalk/cheb_engine.hpp"
#include "qwalk/config.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/limit_law.hpp"

using namespace qwalk;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);
constexpr double kSafety = 1.1;

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

cplx random_phase(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, ang(rng));
}

/// Number of steps where v goes up.
int rises(const std::vector<double>& v)
{
    int r = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        r += v[i] > v[i - 1] ? 1 : 0;
    }
    return r;
}

std::string join(const std::vector<double>& v)
{
    std::string s;
    for (double x : v) {
        s += (s.empty() ? "" : " ") + sci(x);
    }
    return s;
}

Verdict dual_path()
{
    std::mt19937_64 rng(1001);
    std::vector<CoinMatrix> coins{hadamard_coin()};
    while (coins.size() < 21) {
        coins.push_back(oracle::random_coin(rng));
    }
    double worst = 0.0;
    for (const CoinMatrix& c : coins) {
        const PolarParams pp = polar(c);
        std::vector<Spinor> psis;
        std::vector<Walker> walkers;
        for (int j = 0; j < 10; ++j) {
            psis.push_back(oracle::random_unit(rng));
            walkers.emplace_back(phi_from_psi(psis.back(), pp), c);
        }
        TransferSequence seq(pp.s, pp.t);
        for (int n = 1; n <= 200; ++n) {
            seq.advance();
            const TransferQuadruple tq = seq.quadruple();
            for (int j = 0; j < 10; ++j) {
                walkers[j].advance();
                const double gap =
                    max_abs_gap(distribution(walkers[j].state()), qn_distribution(psis[j], tq));
                worst = std::max(worst, gap);
            }
        }
    }
    return {worst < 1e-10, "21 coins x 10 psi x n = 1..200, max gap " + sci(worst) + " < 1e-10"};
}

Verdict hand_pins()
{
    const Spinor up{cplx(1, 0), cplx(0, 0)};
    struct Pin {
        int n;
        std::vector<std::pair<std::int64_t, double>> probs;
    };
    const std::vector<Pin> pins{{1, {{1, 1.0}, {-1, 0.0}}},
                                {2, {{2, 0.5}, {0, 0.5}, {-2, 0.0}}},
                                {3, {{3, 0.25}, {1, 0.5}, {-1, 0.25}, {-3, 0.0}}}};
    double worst = 0.0;
    for (const Pin& p : pins) {
        const Distribution d = distribution(evolve(up, hadamard_coin(), p.n));
        const auto brute = oracle::brute_force_distribution(r2, r2, up, p.n);
        for (const auto& [x, want] : p.probs) {
            worst = std::max(worst, std::abs(d.at(x) - want));
            worst = std::max(worst, std::abs(brute.at(x) - want));
        }
    }
    return {worst < 1e-12, "Hadamard from (1,0), n = 1, 2, 3: max deviation " + sci(worst) +
                               " < 1e-12"};
}

Verdict normalization()
{
    std::mt19937_64 rng(1003);
    double worst_norm = 0.0;
    double worst_total = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const CoinMatrix c = trial == 0 ? hadamard_coin() : oracle::random_coin(rng);
        Walker w(oracle::random_unit(rng), c);
        for (int n = 1; n <= 5000; ++n) {
            w.advance();
            worst_norm = std::max(worst_norm, std::abs(w.state().norm_sq() - 1.0));
            worst_total = std::max(worst_total, std::abs(distribution(w.state()).total() - 1.0));
        }
    }
    return {worst_norm < 1e-12 && worst_total < 1e-12,
            "n <= 5000: |sum p - 1| " + sci(worst_total) + ", norm drift " + sci(worst_norm) +
                " < 1e-12"};
}

Verdict algebra()
{
    std::mt19937_64 rng(1004);
    std::uniform_real_distribution<double> su(0.05, 0.95);
    double rel = 0.0;
    double gram = 0.0;
    double qwr = 0.0;
    for (int N : {3, 4, 8, 16, 64}) {
        for (int trial = 0; trial < 20; ++trial) {
            const double s = su(rng);
            const CyclicRep rep = build_rep(N, random_phase(rng), random_phase(rng));
            rel = std::max(rel, relation_residuals(rep, s, std::sqrt(1 - s * s)).worst());
            gram = std::max(gram, gram_residual(build_basis(rep)));
            qwr = std::max(qwr, qwr_check(rep));
        }
    }
    return {rel <= 1e-12 && gram <= 1e-12 && qwr < 1e-14,
            "N in {3,4,8,16,64} x 20 draws: relations " + sci(rel) + ", Gram " + sci(gram) +
                " (<= 1e-12), QWR " + sci(qwr) + " (< 1e-14)"};
}

const std::vector<std::int64_t> kGrid{125, 250, 500, 1000, 2000};

Verdict weak_limit(const ExperimentConfig& sym, const ExperimentConfig& biased)
{
    Verdict v;
    for (const ExperimentConfig* cfg : {&sym, &biased}) {
        const CoinMatrix coin = make_coin(cfg->a, cfg->b);
        const LimitDensity limit = limit_density_for(cfg->phi, coin);
        Walker w(cfg->phi, coin);
        std::vector<double> dn;
        for (std::int64_t n : kGrid) {
            while (w.n() < n) {
                w.advance();
            }
            dn.push_back(kolmogorov_distance(distribution(w.state()), static_cast<double>(n), limit));
        }
        const double threshold = cfg->kolmogorov_threshold.value_or(0.0);
        const bool ok =
            rises(dn) <= 1 && dn.back() < threshold && threshold / kSafety < 0.05;
        v.pass = v.pass && ok;
        char lam[16];
        std::snprintf(lam, sizeof lam, "%.2f", limit.lambda + 0.0);
        v.detail += (v.detail.empty() ? "" : "; ") + std::string("lambda=") + lam + " D_n [" +
                    join(dn) + "], D_2000 < " + sci(threshold);
    }
    return v;
}

Verdict charfn(const ExperimentConfig& cfg)
{
    const PolarParams p = polar(make_coin(cfg.a, cfg.b));
    const Spinor psi = psi_from_phi(cfg.phi, p);
    const LimitDensity limit = make_limit_density(p.s, p.t, lambda_psi(psi, p.s, p.t));
    TransferSequence seq(p.s, p.t);
    std::vector<double> xis{0.0, 0.5, 1.0, 2.0};
    std::vector<std::vector<double>> gaps(xis.size());
    for (std::int64_t n : kGrid) {
        while (seq.n() < n) {
            seq.advance();
        }
        const TransferQuadruple tq = seq.quadruple();
        for (std::size_t i = 0; i < xis.size(); ++i) {
            const cplx e = char_fn_components(psi, tq, xis[i] / static_cast<double>(n)).E;
            gaps[i].push_back(std::abs(e - limit_char_fn(limit, xis[i])));
        }
    }
    const double threshold = cfg.charfn_threshold.value_or(0.0);
    Verdict v;
    double zero_worst = 0.0;
    for (double g : gaps[0]) {
        zero_worst = std::max(zero_worst, g);
    }
    v.pass = zero_worst < 1e-13;
    v.detail = "xi=0 gap " + sci(zero_worst);
    for (std::size_t i = 1; i < xis.size(); ++i) {
        v.pass = v.pass && rises(gaps[i]) == 0 && gaps[i].back() < threshold;
        v.detail += "; xi=" + std::to_string(xis[i]).substr(0, 3) + " [" + join(gaps[i]) + "]";
    }
    v.detail += "; n=2000 < " + sci(threshold);
    return v;
}

Verdict convolution()
{
    std::mt19937_64 rng(1007);
    std::vector<cplx> ws;
    for (int j = 0; j < 25; ++j) {
        ws.push_back(random_phase(rng));
    }
    double worst = 0.0;
    TransferSequence seq(r2, r2);
    for (int n = 0; n <= 100; ++n) {
        const TransferQuadruple tq = seq.quadruple();
        const std::vector<std::pair<const LaurentPoly*, const LaurentPoly*>> pairs{
            {&tq.p1, &tq.p1}, {&tq.p2, &tq.p2}, {&tq.q1, &tq.q1},
            {&tq.q2, &tq.q2}, {&tq.p1, &tq.q1}, {&tq.p2, &tq.q2}};
        for (const cplx w : ws) {
            for (const auto& [p, q] : pairs) {
                const CrossSeriesResult r = cross_series_both(*p, *q, w);
                worst = std::max(worst, std::abs(r.coefficient_side - r.quadrature_side));
            }
        }
        seq.advance();
    }
    return {worst < 1e-10, "n = 0..100, 6 products x 25 w: max |coefficient - contour| " +
                               sci(worst) + " < 1e-10"};
}

Verdict asymptotics(const ExperimentConfig& cfg)
{
    const double s = r2;
    const double threshold = cfg.asym_threshold.value_or(0.0);
    double parity = 0.0;
    double last = 0.0;
    bool trend = true;
    for (std::int64_t k : {0, 1, 2}) {
        for (double xi : {0.0, 1.0}) {
            const AsymValues lim = asym_limits(k, xi, s);
            auto gap = [&](const AsymValues& v) {
                return std::max({std::abs(v.A - lim.A), std::abs(v.B - lim.B),
                                 std::abs(v.C - lim.C), std::abs(v.D - lim.D)});
            };
            double g200 = 0.0;
            for (std::int64_t n : {std::int64_t{125}, std::int64_t{200}, std::int64_t{250},
                                   std::int64_t{500}, std::int64_t{1000}, std::int64_t{2000}}) {
                const AsymValues v = asym_integrals(n, k, xi, s);
                parity = std::max(parity, k % 2 == 0 ? std::max(std::abs(v.B), std::abs(v.C))
                                                     : std::max(std::abs(v.A), std::abs(v.D)));
                if (n == 200) {
                    g200 = gap(v);
                }
                if (n == 2000) {
                    last = std::max(last, gap(v));
                    trend = trend && gap(v) < g200;
                }
            }
        }
    }
    return {parity < 1e-10 && last < threshold && trend,
            "k in {0,1,2}, xi in {0,1}: n=2000 max gap " + sci(last) + " < " + sci(threshold) +
                ", below n=200 gap: " + (trend ? "yes" : "no") + ", parity columns " +
                sci(parity) + " < 1e-10"};
}

Verdict lambda_consistency()
{
    std::mt19937_64 rng(1009);
    double worst = 0.0;
    double min_density = 1.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const CoinMatrix c = oracle::random_coin(rng);
        const PolarParams pp = polar(c);
        const Spinor phi = oracle::random_unit(rng);
        const double lp = lambda_phi(phi, c);
        const double ls = lambda_psi(psi_from_phi(phi, pp), pp.s, pp.t);
        worst = std::max(worst, std::abs(lp - ls));
        for (int j = -20; j <= 20; ++j) {
            const double y = pp.s * j / 20.5;
            const double raw = pp.t * (1 + ls * y) /
                               (std::numbers::pi * (1 - y * y) * std::sqrt(pp.s * pp.s - y * y));
            min_density = std::min(min_density, raw);
        }
    }
    return {worst < 1e-12 && min_density >= 0.0,
            "10000 draws: max |lambda_phi - lambda_psi| " + sci(worst) +
                " < 1e-12, min density " + sci(min_density) + " >= 0"};
}

}  // namespace

int main()
{
    namespace fs = std::filesystem;
    const ExperimentConfig sym = default_config();
    const ExperimentConfig biased =
        load_config(fs::path(QWALK_SOURCE_DIR) / "configs" / "hadamard_biased.json");

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 dual-path equivalence", dual_path},
        {"2 hand-derived pins", hand_pins},
        {"3 normalization and unitarity", normalization},
        {"4 algebra suite", algebra},
        {"5 weak-limit convergence", [&] { return weak_limit(sym, biased); }},
        {"6 characteristic-function convergence", [&] { return charfn(sym); }},
        {"7 convolution identity", convolution},
        {"8 asymptotic-integral convergence", [&] { return asymptotics(sym); }},
        {"9 lambda consistency", lambda_consistency},
    };

    int failed = 0;
    for (const auto& [name, run] : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %-40s %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
