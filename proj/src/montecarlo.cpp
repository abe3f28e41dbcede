#include "snd/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace snd {

namespace {

// Acklam's rational approximation of the standard normal quantile.
double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("quantile argument out of (0,1)");
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p > phigh) {
        q = std::sqrt(-2 * std::log(1 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                          double confidence_pct) {
    if (trials == 0) return {0.0, 1.0};
    double z = normal_quantile(0.5 + confidence_pct / 200.0);
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    double lo = center - half, hi = center + half;
    if (lo < 0) lo = 0;
    if (hi > 1) hi = 1;
    return {lo, hi};
}

Estimate estimate_event_probability(const Tas& tas,
                                    const std::function<bool(const SequenceResult&)>& success,
                                    const McParams& params) {
    if (params.trials < 1) throw std::invalid_argument("trials must be >= 1");
    unsigned nthreads = params.threads ? params.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    if (nthreads > params.trials) nthreads = static_cast<unsigned>(params.trials);

    std::atomic<std::uint64_t> next{0};
    std::vector<std::uint64_t> ok(nthreads, 0), capped(nthreads, 0);
    auto worker = [&](unsigned me) {
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= params.trials) break;
            SequenceResult r =
                run_sequence(tas, derive_seed(params.seed, i), params.step_cap, false);
            if (r.status == RunStatus::StepCapExceeded)
                ++capped[me];
            else if (success(r))
                ++ok[me];
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    Estimate e;
    e.trials = params.trials;
    for (unsigned t = 0; t < nthreads; ++t) {
        e.successes += ok[t];
        e.cap_exceeded += capped[t];
    }
    e.point = static_cast<double>(e.successes) / static_cast<double>(e.trials);
    std::tie(e.ci_low, e.ci_high) = wilson_interval(e.successes, e.trials, params.confidence_pct);
    return e;
}

Estimate estimate_shape_probability(const Tas& tas, const std::set<Point>& target,
                                    const McParams& params) {
    if (target.empty()) throw std::invalid_argument("target shape must be non-empty");
    auto success = [&target](const SequenceResult& r) {
        if (r.final.size() != target.size()) return false;
        for (const auto& [p, t] : r.final.placements())
            if (!target.count(p)) return false;
        return true;
    };
    return estimate_event_probability(tas, success, params);
}

}  // namespace snd
