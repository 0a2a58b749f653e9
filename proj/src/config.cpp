#include "qwalk/config.hpp"

#include <fstream>
#include <sstream>
#include <type_traits>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

// Pinned thresholds: measured once with `qwalk <cmd>` on this config
// (see README, "Pinned thresholds") and multiplied by 1.1.
constexpr const char* kDefaultConfig = R"({
  "schema": "qwalk-experiment/1",
  "coin": {"a": [0.70710678118654752, 0.0], "b": [0.70710678118654752, 0.0]},
  "phi": [[0.70710678118654752, 0.0], [0.0, 0.70710678118654752]],
  "n": [125, 250, 500, 1000, 2000],
  "xi": [0.5, 1.0, 2.0],
  "asym_xi": [0.0, 1.0],
  "k": [0, 1, 2],
  "N": 16,
  "seed": 20240601,
  "tolerances": {"gap": 1e-10, "algebra": 1e-12, "parity": 1e-10},
  "thresholds": {"kolmogorov": 0.01567, "charfn": 1.333e-07, "asym": 0.009819},
  "max_n": 100000,
  "out": "qwalk_out"
})";

cplx read_complex(const json& v, const char* what)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError(std::string(what) + " must be [re, im]");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

template <class T>
std::vector<T> read_list(const json& j, const char* key)
{
    std::vector<T> out;
    if (!j.contains(key)) {
        return out;
    }
    const json& v = j.at(key);
    if (!v.is_array()) {
        throw ConfigError(std::string(key) + " must be an array");
    }
    for (const auto& e : v) {
        if (!e.is_number()) {
            throw ConfigError(std::string(key) + " entries must be numbers");
        }
        if constexpr (std::is_integral_v<T>) {
            if (!e.is_number_integer()) {
                throw ConfigError(std::string(key) + " entries must be integers");
            }
        }
        out.push_back(e.get<T>());
    }
    return out;
}

std::optional<double> read_optional(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    if (!j.at(key).is_number()) {
        throw ConfigError(std::string(key) + " must be a number");
    }
    const double v = j.at(key).get<double>();
    if (!(v > 0.0)) {
        throw ConfigError(std::string(key) + " threshold must be positive");
    }
    return v;
}

json complex_json(cplx z)
{
    return json::array({z.real(), z.imag()});
}

}  // namespace

ExperimentConfig parse_config(const json& j)
{
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    if (!j.contains("schema") || j.at("schema") != kConfigSchema) {
        throw ConfigError("config schema must be \"" + std::string(kConfigSchema) + "\"");
    }
    ExperimentConfig c;
    try {
        if (!j.contains("coin") || !j.at("coin").contains("a") || !j.at("coin").contains("b")) {
            throw ConfigError("config needs coin.a and coin.b");
        }
        c.a = read_complex(j.at("coin").at("a"), "coin.a");
        c.b = read_complex(j.at("coin").at("b"), "coin.b");
        make_coin(c.a, c.b);

        if (!j.contains("phi") || !j.at("phi").is_array() || j.at("phi").size() != 2) {
            throw ConfigError("phi must be [[re, im], [re, im]]");
        }
        c.phi = {read_complex(j.at("phi")[0], "phi[0]"), read_complex(j.at("phi")[1], "phi[1]")};
        require_unit(c.phi, kInputNormTol, "phi");

        c.steps = read_list<std::int64_t>(j, "n");
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            if (c.steps[i] < 0 || (i > 0 && c.steps[i] <= c.steps[i - 1])) {
                throw ConfigError("n must be strictly increasing non-negative integers");
            }
        }
        c.xi = read_list<double>(j, "xi");
        c.asym_xi = read_list<double>(j, "asym_xi");
        c.k = read_list<std::int64_t>(j, "k");

        if (j.contains("N")) {
            c.N = j.at("N").get<int>();
        }
        if (c.N < 3) {
            throw ConfigError("N must be at least 3");
        }
        if (j.contains("alpha")) {
            c.alpha = read_complex(j.at("alpha"), "alpha");
        }
        if (j.contains("beta")) {
            c.beta = read_complex(j.at("beta"), "beta");
        }
        if (j.contains("seed")) {
            c.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("tolerances")) {
            const json& t = j.at("tolerances");
            c.gap_tol = t.value("gap", c.gap_tol);
            c.algebra_tol = t.value("algebra", c.algebra_tol);
            c.parity_tol = t.value("parity", c.parity_tol);
        }
        if (j.contains("thresholds")) {
            const json& t = j.at("thresholds");
            c.kolmogorov_threshold = read_optional(t, "kolmogorov");
            c.charfn_threshold = read_optional(t, "charfn");
            c.asym_threshold = read_optional(t, "asym");
        }
        c.perturb_w = j.value("perturb_w", 0.0);
        c.max_n = j.value("max_n", c.max_n);
        if (j.contains("out")) {
            c.out = j.at("out").get<std::string>();
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot read config " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    return parse_config(j);
}

nlohmann::json default_config_json()
{
    return json::parse(kDefaultConfig);
}

ExperimentConfig default_config()
{
    return parse_config(default_config_json());
}

nlohmann::json to_json(const ExperimentConfig& c)
{
    json j;
    j["schema"] = kConfigSchema;
    j["coin"] = {{"a", complex_json(c.a)}, {"b", complex_json(c.b)}};
    j["phi"] = json::array({complex_json(c.phi[0]), complex_json(c.phi[1])});
    j["n"] = c.steps;
    j["xi"] = c.xi;
    if (!c.asym_xi.empty()) {
        j["asym_xi"] = c.asym_xi;
    }
    j["k"] = c.k;
    j["N"] = c.N;
    if (c.alpha) {
        j["alpha"] = complex_json(*c.alpha);
    }
    if (c.beta) {
        j["beta"] = complex_json(*c.beta);
    }
    j["seed"] = c.seed;
    j["tolerances"] = {{"gap", c.gap_tol}, {"algebra", c.algebra_tol}, {"parity", c.parity_tol}};
    json th = json::object();
    th["kolmogorov"] = c.kolmogorov_threshold ? json(*c.kolmogorov_threshold) : json(nullptr);
    th["charfn"] = c.charfn_threshold ? json(*c.charfn_threshold) : json(nullptr);
    th["asym"] = c.asym_threshold ? json(*c.asym_threshold) : json(nullptr);
    j["thresholds"] = th;
    if (c.perturb_w != 0.0) {
        j["perturb_w"] = c.perturb_w;
    }
    j["max_n"] = c.max_n;
    j["out"] = c.out.string();
    return j;
}

}  // namespace qwalk
