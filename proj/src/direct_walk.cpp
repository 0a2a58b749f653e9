#include "qwalk/direct_walk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/kernels.hpp"

namespace qwalk {

Spinor WalkState::at(std::int64_t x) const
{
    if (x < lo() || x > hi()) {
        return {};
    }
    return amps[static_cast<std::size_t>(x - offset)];
}

double WalkState::norm_sq() const
{
    double acc = 0.0;
    for (const auto& u : amps) {
        acc += qwalk::norm_sq(u);
    }
    return acc;
}

double Distribution::at(std::int64_t x) const
{
    if (x < lo() || x > hi()) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(x - offset)];
}

double Distribution::total() const
{
    double acc = 0.0;
    for (double p : probs) {
        acc += p;
    }
    return acc;
}

double Distribution::mean() const
{
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k] * static_cast<double>(offset + static_cast<std::int64_t>(k));
    }
    return acc;
}

WalkState initial_state(const Spinor& phi)
{
    require_unit(phi, kInputNormTol, "initial state phi");
    return {0, {phi}};
}

namespace {

WalkState grown(const WalkState& st)
{
    WalkState out;
    out.offset = st.offset - 1;
    out.amps.resize(st.amps.size() + 2);
    return out;
}

}  // namespace

WalkState step(const WalkState& st, const CoinMatrix& c)
{
    WalkState out = grown(st);
    kernels::parallel::walk_step(st.amps, out.amps, split(c));
    return out;
}

WalkState step_serial(const WalkState& st, const CoinMatrix& c)
{
    WalkState out = grown(st);
    kernels::serial::walk_step(st.amps, out.amps, split(c));
    return out;
}

WalkState evolve(const Spinor& phi, const CoinMatrix& c, std::int64_t n, std::int64_t max_steps)
{
    if (n < 0) {
        throw ResourceLimit("negative step count");
    }
    if (n > max_steps) {
        throw ResourceLimit("step count " + std::to_string(n) + " exceeds maximum " +
                            std::to_string(max_steps));
    }
    Walker w(phi, c);
    for (std::int64_t k = 0; k < n; ++k) {
        w.advance();
    }
    return w.state();
}

Distribution distribution(const WalkState& st)
{
    Distribution d;
    d.offset = st.offset;
    d.probs.resize(st.amps.size());
    std::transform(st.amps.begin(), st.amps.end(), d.probs.begin(),
                   [](const Spinor& u) { return qwalk::norm_sq(u); });
    return d;
}

cplx char_fn(const Distribution& d, double xi)
{
    return kernels::parallel::phase_sum(d.probs, d.offset, xi);
}

double max_abs_gap(const Distribution& a, const Distribution& b)
{
    const std::int64_t lo = std::min(a.lo(), b.lo());
    const std::int64_t hi = std::max(a.hi(), b.hi());
    double gap = 0.0;
    for (std::int64_t x = lo; x <= hi; ++x) {
        gap = std::max(gap, std::abs(a.at(x) - b.at(x)));
    }
    return gap;
}

Walker::Walker(const Spinor& phi, const CoinMatrix& c)
    : pq_(split(c)), cur_(initial_state(phi))
{
}

void Walker::advance()
{
    next_.offset = cur_.offset - 1;
    next_.amps.resize(cur_.amps.size() + 2);
    kernels::parallel::walk_step(cur_.amps, next_.amps, pq_);
    std::swap(cur_, next_);
    ++n_;
}

}  // namespace qwalk
