#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "qwalk/coin.hpp"

namespace qwalk {

inline constexpr std::string_view kConfigSchema = "qwalk-experiment/1";

/// One experiment, as read from a JSON config file.
///
/// Complex values are written as [re, im]. Thresholds are the pinned
/// convergence limits; a command that needs one fails with exit code 2 when
/// it is missing.
struct ExperimentConfig {
    cplx a;
    cplx b;
    Spinor phi;
    std::vector<std::int64_t> steps;
    std::vector<double> xi;
    /// xi grid for the asym command; empty means reuse xi.
    std::vector<double> asym_xi;
    std::vector<std::int64_t> k;
    int N = 16;
    std::optional<cplx> alpha;
    std::optional<cplx> beta;
    std::uint64_t seed = 20240601;

    double gap_tol = 1e-10;
    double algebra_tol = 1e-12;
    double parity_tol = 1e-10;
    std::optional<double> kolmogorov_threshold;
    std::optional<double> charfn_threshold;
    std::optional<double> asym_threshold;
    /// Fault injection for the algebra check: W += scale * random matrix.
    double perturb_w = 0.0;

    std::int64_t max_n = 100000;
    std::filesystem::path out = "qwalk_out";
};

/// Parses and validates; throws ConfigError (or NormViolation for bad
/// coins/states).
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Built-in default: Hadamard coin, symmetric initial state, pinned thresholds.
nlohmann::json default_config_json();
ExperimentConfig default_config();

nlohmann::json to_json(const ExperimentConfig& cfg);

}  // namespace qwalk
