#ifndef RAMP_ORACLE_HPP
#define RAMP_ORACLE_HPP

#include "ramp/codes.hpp"
#include "ramp/schemes.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace ramp {

/// Exact (rational-arithmetic) results of enumerating every per-block
/// outcome vector under a scheme's read procedure.
struct SchemeExact {
    double p_lb_due = 0.0;
    double a_r = 0.0;
    /// Probability that the read "succeeds" but returns silently corrupt
    /// data. NDE blocks never trigger fallback.
    double p_any_nde = 0.0;
};

/// Enumerate all 3^N outcome vectors over {ok, due, nde} with exact
/// rational probabilities and replay the scheme's read procedure on each:
/// sequential fallback for primary-backup, sequential K-of-N collection for
/// erasure coding. Throws std::domain_error for N > 20 or invalid
/// probabilities. The outcome-vector masses are asserted to sum to exactly 1.
SchemeExact enumerate_scheme(double p_due, double p_nde, const Scheme& scheme);

/// One analytic-vs-empirical comparison.
struct ValidationVerdict {
    std::string name;
    double analytic = 0.0;
    double empirical = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    bool pass = true;
    /// Set when the expected event count is below 10 (estimate is noise).
    bool low_events = false;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// Seeded Monte Carlo replay of the scheme's read procedure. Per-block
/// outcomes are Bernoulli draws; each trial derives its own RNG stream from
/// (seed, trial index). Returns verdicts for p_lb_due and a_r against the
/// supplied analytic values. Requires trials >= 1e4.
std::pair<ValidationVerdict, ValidationVerdict>
montecarlo_scheme(double p_due, double p_nde, const Scheme& scheme,
                  std::uint64_t trials, std::uint64_t seed,
                  double analytic_p_lb_due, double analytic_a_r,
                  double z_threshold = 4.0);

/// Seeded Monte Carlo at the codeword level: per trial the error count is a
/// Binomial(n, rber) draw; counts above t split DUE/NDE by the miscorrection
/// fraction. Compares against the codes-module analytics (perf_filter
/// excluded, it is a plain multiplier). Requires rber*n*trials >= 100 so
/// uncorrectable events are actually observable.
std::pair<ValidationVerdict, ValidationVerdict>
montecarlo_bits(const CodeSpec& code, double rber, std::uint64_t trials,
                std::uint64_t seed, double analytic_p_c_due,
                double analytic_p_c_nde, double z_threshold = 4.0);

} // namespace ramp

#endif
