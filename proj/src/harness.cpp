#include "qwalk/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qwalk/algebra_check.hpp"
#include "qwalk/cheb_engine.hpp"
#include "qwalk/direct_walk.hpp"
#include "qwalk/error.hpp"
#include "qwalk/io.hpp"
#include "qwalk/limit_law.hpp"

namespace qwalk {

namespace {

namespace fs = std::filesystem;

constexpr int kDensityTablePoints = 401;

std::string fmt(double v)
{
    return io::format_double(v);
}

void emit(CommandResult& r, const fs::path& path, const std::string& content)
{
    io::write_atomic(path, content);
    r.files.push_back(path);
}

std::int64_t largest_step(const ExperimentConfig& cfg)
{
    if (cfg.steps.empty()) {
        throw ConfigError("config lists no step counts n");
    }
    const std::int64_t n = cfg.steps.back();
    if (n > cfg.max_n) {
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds max_n = " +
                            std::to_string(cfg.max_n));
    }
    return n;
}

cplx random_phase(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, angle(rng));
}

}  // namespace

CommandResult cmd_simulate(const ExperimentConfig& cfg)
{
    CommandResult r;
    largest_step(cfg);
    const CoinMatrix coin = make_coin(cfg.a, cfg.b);

    bool with_cheb = !coin.degenerate();
    Spinor psi{};
    std::optional<TransferSequence> seq;
    if (with_cheb) {
        const PolarParams p = polar(coin);
        psi = psi_from_phi(cfg.phi, p);
        seq.emplace(p.s, p.t);
    } else {
        r.warnings.push_back("coin has a = 0 or b = 0 (DegenerateCoin): Chebyshev path skipped");
    }

    io::CsvTable gaps({"n", "gap"});
    Walker walker(cfg.phi, coin);
    std::optional<std::int64_t> first_failure;
    double worst = 0.0;
    for (const std::int64_t n : cfg.steps) {
        while (walker.n() < n) {
            walker.advance();
        }
        const Distribution direct = distribution(walker.state());
        const std::string tag = "_n" + std::to_string(n) + ".csv";
        emit(r, cfg.out / ("simulate_direct" + tag), io::distribution_csv(direct));
        emit(r, cfg.out / ("simulate_state" + tag), io::state_csv(walker.state()));
        if (!with_cheb) {
            continue;
        }
        while (seq->n() < n) {
            seq->advance();
        }
        const TransferQuadruple tq = seq->quadruple();
        const Distribution cheb = qn_distribution(psi, tq);
        emit(r, cfg.out / ("simulate_cheb" + tag), io::distribution_csv(cheb));
        emit(r, cfg.out / ("simulate_transfer" + tag), io::transfer_csv(tq));
        const double gap = max_abs_gap(direct, cheb);
        worst = std::max(worst, gap);
        gaps.add_row(std::vector<std::string>{std::to_string(n), fmt(gap)});
        if (!(gap < cfg.gap_tol) && !first_failure) {
            first_failure = n;
        }
    }
    if (with_cheb) {
        emit(r, cfg.out / "simulate_gaps.csv", gaps.str());
    }

    if (first_failure) {
        r.exit_code = kExitCheckFailed;
        r.message = "simulate: direct/Chebyshev gap exceeds " + fmt(cfg.gap_tol) +
                    " first at n = " + std::to_string(*first_failure);
    } else {
        r.message = with_cheb ? "simulate: max gap " + fmt(worst) + " < " + fmt(cfg.gap_tol)
                              : "simulate: direct path only";
    }
    return r;
}

CommandResult cmd_limit(const ExperimentConfig& cfg)
{
    CommandResult r;
    const std::int64_t n_max = largest_step(cfg);
    if (!cfg.kolmogorov_threshold) {
        throw ConfigError("limit needs thresholds.kolmogorov");
    }
    const CoinMatrix coin = make_coin(cfg.a, cfg.b);
    const LimitDensity limit = limit_density_for(cfg.phi, coin);
    const double mean_limit = limit_mean(limit);

    io::CsvTable dn({"n", "Dn"});
    io::CsvTable means({"n", "mean", "limit_mean"});
    Walker walker(cfg.phi, coin);
    double last = 0.0;
    for (const std::int64_t n : cfg.steps) {
        if (n == 0) {
            r.warnings.push_back("limit: n = 0 skipped (X_n/n undefined)");
            continue;
        }
        while (walker.n() < n) {
            walker.advance();
        }
        const Distribution d = distribution(walker.state());
        last = kolmogorov_distance(d, static_cast<double>(n), limit);
        dn.add_row(std::vector<std::string>{std::to_string(n), fmt(last)});
        means.add_row(std::vector<std::string>{std::to_string(n),
                                               fmt(d.mean() / static_cast<double>(n)),
                                               fmt(mean_limit)});
    }

    io::CsvTable table({"y", "density", "cdf"});
    for (int i = 0; i < kDensityTablePoints; ++i) {
        const double y = -limit.s + 2.0 * limit.s * i / (kDensityTablePoints - 1);
        table.add_row({y, density(limit, y), cdf(limit, y)});
    }
    emit(r, cfg.out / "limit_kolmogorov.csv", dn.str());
    emit(r, cfg.out / "limit_mean.csv", means.str());
    emit(r, cfg.out / "limit_density.csv", table.str());

    const double threshold = *cfg.kolmogorov_threshold;
    if (last < threshold) {
        r.message = "limit: D_" + std::to_string(n_max) + " = " + fmt(last) + " < " + fmt(threshold);
    } else {
        r.exit_code = kExitCheckFailed;
        r.message = "limit: D_" + std::to_string(n_max) + " = " + fmt(last) +
                    " not below threshold " + fmt(threshold);
    }
    return r;
}

CommandResult cmd_charfn(const ExperimentConfig& cfg)
{
    CommandResult r;
    const std::int64_t n_max = largest_step(cfg);
    if (!cfg.charfn_threshold) {
        throw ConfigError("charfn needs thresholds.charfn");
    }
    if (cfg.xi.empty()) {
        throw ConfigError("charfn needs a non-empty xi grid");
    }
    const CoinMatrix coin = make_coin(cfg.a, cfg.b);
    const PolarParams p = polar(coin);
    const Spinor psi = psi_from_phi(cfg.phi, p);
    const LimitDensity limit = make_limit_density(p.s, p.t, lambda_psi(psi, p.s, p.t));

    std::vector<cplx> limits;
    for (double xi : cfg.xi) {
        limits.push_back(limit_char_fn(limit, xi));
    }

    io::CsvTable table({"n", "xi", "reE", "imE", "reLimit", "imLimit", "gap"});
    TransferSequence seq(p.s, p.t);
    double last_row = 0.0;
    for (const std::int64_t n : cfg.steps) {
        if (n == 0) {
            r.warnings.push_back("charfn: n = 0 skipped (xi/n undefined)");
            continue;
        }
        while (seq.n() < n) {
            seq.advance();
        }
        const TransferQuadruple tq = seq.quadruple();
        double row = 0.0;
        for (std::size_t i = 0; i < cfg.xi.size(); ++i) {
            const double xi = cfg.xi[i];
            const cplx e = char_fn_components(psi, tq, xi / static_cast<double>(n)).E;
            const double gap = std::abs(e - limits[i]);
            row = std::max(row, gap);
            table.add_row({static_cast<double>(n), xi, e.real(), e.imag(), limits[i].real(),
                           limits[i].imag(), gap});
        }
        last_row = row;
    }
    emit(r, cfg.out / "charfn.csv", table.str());

    const double threshold = *cfg.charfn_threshold;
    if (last_row < threshold) {
        r.message = "charfn: max gap at n = " + std::to_string(n_max) + " is " + fmt(last_row) +
                    " < " + fmt(threshold);
    } else {
        r.exit_code = kExitCheckFailed;
        r.message = "charfn: max gap at n = " + std::to_string(n_max) + " is " + fmt(last_row) +
                    ", not below threshold " + fmt(threshold);
    }
    return r;
}

CommandResult cmd_algebra(const ExperimentConfig& cfg)
{
    CommandResult r;
    std::mt19937_64 rng(cfg.seed);
    const cplx alpha = cfg.alpha ? *cfg.alpha : random_phase(rng);
    const cplx beta = cfg.beta ? *cfg.beta : random_phase(rng);
    const CoinMatrix coin = make_coin(cfg.a, cfg.b);
    const double s = std::abs(coin.a());
    const double t = std::abs(coin.b());

    CyclicRep rep = build_rep(cfg.N, alpha, beta);
    if (cfg.perturb_w != 0.0) {
        std::normal_distribution<double> g;
        for (Eigen::Index i = 0; i < rep.W.rows(); ++i) {
            for (Eigen::Index j = 0; j < rep.W.cols(); ++j) {
                rep.W(i, j) += cfg.perturb_w * cplx(g(rng), g(rng));
            }
        }
    }

    RelationReport report = relation_residuals(rep, s, t);
    const CyclicBasis basis = build_basis(rep);
    report.residuals["basis Gram = I"] = gram_residual(basis);
    report.residuals["basis action"] = action_residual(rep, basis);
    report.residuals["QWR overlap"] = qwr_check(rep);
    emit(r, cfg.out / "algebra_report.json", io::relation_json(report).dump(2) + "\n");

    const auto failing = report.failures(cfg.algebra_tol);
    if (failing.empty()) {
        r.message = "algebra: all " + std::to_string(report.residuals.size()) +
                    " identities within " + fmt(cfg.algebra_tol) + " (worst " +
                    fmt(report.worst()) + ")";
    } else {
        r.exit_code = kExitCheckFailed;
        std::ostringstream os;
        os << "algebra: identities above " << fmt(cfg.algebra_tol) << ":";
        for (const auto& name : failing) {
            os << "\n  " << name << " = " << fmt(report.residuals.at(name));
        }
        r.message = os.str();
    }
    return r;
}

CommandResult cmd_asym(const ExperimentConfig& cfg)
{
    CommandResult r;
    const std::int64_t n_max = largest_step(cfg);
    const std::vector<double>& xis = cfg.asym_xi.empty() ? cfg.xi : cfg.asym_xi;
    if (cfg.k.empty() || xis.empty()) {
        throw ConfigError("asym needs non-empty k and xi grids");
    }
    const double s = polar(make_coin(cfg.a, cfg.b)).s;

    io::CsvTable table({"n", "k", "xi", "reA", "imA", "reB", "imB", "reC", "imC", "reD", "imD",
                        "gapA", "gapB", "gapC", "gapD"});
    double parity_worst = 0.0;
    double last_gap = 0.0;
    for (const std::int64_t k : cfg.k) {
        const bool even = k % 2 == 0;
        for (const double xi : xis) {
            AsymValues lim;
            try {
                lim = asym_limits(k, xi, s);
            } catch (const QuadratureFailure& e) {
                throw QuadratureFailure("asym limit (k=" + std::to_string(k) + ", xi=" + fmt(xi) +
                                        "): " + e.what());
            }
            for (const std::int64_t n : cfg.steps) {
                if (n == 0) {
                    continue;
                }
                const AsymValues v = asym_integrals(n, k, xi, s);
                const double gA = std::abs(v.A - lim.A);
                const double gB = std::abs(v.B - lim.B);
                const double gC = std::abs(v.C - lim.C);
                const double gD = std::abs(v.D - lim.D);
                parity_worst = std::max(parity_worst, even ? std::max(std::abs(v.B), std::abs(v.C))
                                                           : std::max(std::abs(v.A), std::abs(v.D)));
                if (n == n_max) {
                    last_gap = std::max({last_gap, gA, gB, gC, gD});
                }
                table.add_row({static_cast<double>(n), static_cast<double>(k), xi, v.A.real(),
                               v.A.imag(), v.B.real(), v.B.imag(), v.C.real(), v.C.imag(),
                               v.D.real(), v.D.imag(), gA, gB, gC, gD});
            }
        }
    }
    emit(r, cfg.out / "asym.csv", table.str());

    std::ostringstream os;
    bool ok = parity_worst < cfg.parity_tol;
    os << "asym: parity-vanishing columns max " << fmt(parity_worst) << "; max gap at n = "
       << n_max << " is " << fmt(last_gap);
    if (cfg.asym_threshold) {
        ok = ok && last_gap < *cfg.asym_threshold;
        os << " (threshold " << fmt(*cfg.asym_threshold) << ")";
    }
    r.exit_code = ok ? kExitOk : kExitCheckFailed;
    r.message = os.str();
    return r;
}

CommandResult run_command(const std::string& verb, const ExperimentConfig& cfg)
{
    try {
        if (verb == "simulate") {
            return cmd_simulate(cfg);
        }
        if (verb == "limit") {
            return cmd_limit(cfg);
        }
        if (verb == "charfn") {
            return cmd_charfn(cfg);
        }
        if (verb == "algebra") {
            return cmd_algebra(cfg);
        }
        if (verb == "asym") {
            return cmd_asym(cfg);
        }
        return {kExitInvalidConfig, "unknown command " + verb, {}, {}};
    } catch (const ConfigError& e) {
        return {kExitInvalidConfig, e.what(), {}, {}};
    } catch (const NormViolation& e) {
        return {kExitInvalidConfig, e.what(), {}, {}};
    } catch (const DegenerateCoin& e) {
        return {kExitInvalidConfig, e.what(), {}, {}};
    } catch (const ParamViolation& e) {
        return {kExitInvalidConfig, e.what(), {}, {}};
    } catch (const ResourceLimit& e) {
        return {kExitInvalidConfig, e.what(), {}, {}};
    } catch (const Error& e) {
        return {kExitCheckFailed, verb + ": " + e.what(), {}, {}};
    }
}

}  // namespace qwalk
