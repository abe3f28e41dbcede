#ifndef SND_MONTECARLO_HPP
#define SND_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <set>

#include "snd/dynamics.hpp"
#include "snd/rational.hpp"

namespace snd {

struct Estimate {
    std::uint64_t successes = 0;
    std::uint64_t trials = 0;
    std::uint64_t cap_exceeded = 0;
    double point = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
    // A nonzero cap_exceeded count means `point` is only a lower bound on
    // the probability of the modeled event.
    bool lower_bound_only() const { return cap_exceeded > 0; }
};

// Wilson score interval for s successes in n trials at the given two-sided
// confidence (percent, e.g. 99.0).
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double confidence_pct);

struct McParams {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    std::uint64_t step_cap = 1;
    double confidence_pct = 99.0;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// A trial succeeds iff it terminates within the cap and the predicate holds.
// Cap-exceeded trials count as failures and are tallied separately.
Estimate estimate_event_probability(const Tas& tas,
                                    const std::function<bool(const SequenceResult&)>& success,
                                    const McParams& params);

// Success = terminal and dom(final) == target.
Estimate estimate_shape_probability(const Tas& tas, const std::set<Point>& target,
                                    const McParams& params);

}  // namespace snd

#endif
