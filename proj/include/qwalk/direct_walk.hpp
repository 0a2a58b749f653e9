#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

inline constexpr std::int64_t kDefaultMaxSteps = 100000;

/// Amplitudes on the consecutive sites offset, offset+1, ...
struct WalkState {
    std::int64_t offset = 0;
    std::vector<Spinor> amps;

    std::int64_t lo() const { return offset; }
    std::int64_t hi() const { return offset + static_cast<std::int64_t>(amps.size()) - 1; }
    /// Zero outside the window.
    Spinor at(std::int64_t x) const;
    double norm_sq() const;
};

/// Probabilities on consecutive sites starting at offset.
struct Distribution {
    std::int64_t offset = 0;
    std::vector<double> probs;

    std::int64_t lo() const { return offset; }
    std::int64_t hi() const { return offset + static_cast<std::int64_t>(probs.size()) - 1; }
    double at(std::int64_t x) const;
    double total() const;
    double mean() const;
};

/// delta_0 (x) phi. Throws NormViolation.
WalkState initial_state(const Spinor& phi);

/// Applies U(A) = P tau + Q tau^{-1} once; the window grows by one site per side.
WalkState step(const WalkState& st, const CoinMatrix& c);

/// Serial reference for step(); same result bit for bit.
WalkState step_serial(const WalkState& st, const CoinMatrix& c);

/// U(A)^n (delta_0 (x) phi). Throws ResourceLimit if n > max_steps.
WalkState evolve(const Spinor& phi, const CoinMatrix& c, std::int64_t n,
                 std::int64_t max_steps = kDefaultMaxSteps);

Distribution distribution(const WalkState& st);

/// sum_x p(x) exp(i xi x)
cplx char_fn(const Distribution& d, double xi);

/// max_x |a(x) - b(x)| over the union of both supports.
double max_abs_gap(const Distribution& a, const Distribution& b);

/// Incremental evolution that reuses two buffers; n() steps taken so far.
class Walker {
public:
    Walker(const Spinor& phi, const CoinMatrix& c);

    void advance();
    std::int64_t n() const { return n_; }
    const WalkState& state() const { return cur_; }

private:
    CoinSplit pq_;
    WalkState cur_;
    WalkState next_;
    std::int64_t n_ = 0;
};

}  // namespace qwalk
