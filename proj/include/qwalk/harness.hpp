#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qwalk/config.hpp"

namespace qwalk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidConfig = 2;

/// Outcome of one CLI verb: exit code, human-readable summary, files written.
struct CommandResult {
    int exit_code = kExitOk;
    std::string message;
    std::vector<std::string> warnings;
    std::vector<std::filesystem::path> files;
};

/// Direct and Chebyshev distributions for every n, plus their max gap.
///   simulate_direct_n<N>.csv, simulate_cheb_n<N>.csv   x,prob
///   simulate_state_n<N>.csv                            x,re1,im1,re2,im2
///   simulate_transfer_n<N>.csv                         x,p1,p2,q1,q2
///   simulate_gaps.csv                                  n,gap
CommandResult cmd_simulate(const ExperimentConfig& cfg);

/// Kolmogorov distance of X_n/n to the limit law.
///   limit_kolmogorov.csv  n,Dn
///   limit_mean.csv        n,mean,limit_mean
///   limit_density.csv     y,density,cdf
CommandResult cmd_limit(const ExperimentConfig& cfg);

/// |E_n(xi/n) - limit_char_fn(xi)| over the xi and n grids.
///   charfn.csv  n,xi,reE,imE,reLimit,imLimit,gap
CommandResult cmd_charfn(const ExperimentConfig& cfg);

/// Relation residuals of the cyclic representation.
///   algebra_report.json  {identity: residual}
CommandResult cmd_algebra(const ExperimentConfig& cfg);

/// Finite-n contour integrals against their limits over k and asym_xi
/// (falling back to xi).
///   asym.csv  n,k,xi,reA,imA,reB,imB,reC,imC,reD,imD,gapA,gapB,gapC,gapD
CommandResult cmd_asym(const ExperimentConfig& cfg);

/// Dispatches by verb name; maps library errors onto exit codes.
CommandResult run_command(const std::string& verb, const ExperimentConfig& cfg);

}  // namespace qwalk
