#ifndef RAMP_NUMERICS_HPP
#define RAMP_NUMERICS_HPP

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

namespace ramp {

/// A probability stored as its natural logarithm.
///
/// Every probability in the model flows through this type; linear-space
/// values appear only at report boundaries. The plotted quantities span
/// roughly 1e-5 down to 1e-40, which a linear double cannot carry through
/// products of N-fold powers without underflow.
///
/// ln == -inf encodes exactly zero; ln == 0 encodes exactly one.
class LogProb {
public:
    constexpr LogProb() : ln_(-std::numeric_limits<double>::infinity()) {}

    static constexpr LogProb zero() { return LogProb{}; }
    static constexpr LogProb one() { return from_ln(0.0); }

    /// Wrap an already-computed natural log of a probability (must be <= 0).
    static constexpr LogProb from_ln(double ln) {
        LogProb p;
        p.ln_ = ln;
        return p;
    }

    static LogProb from_linear(double p) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::domain_error("LogProb: value outside [0,1]");
        }
        return from_ln(std::log(p));
    }

    double ln() const { return ln_; }
    double linear() const { return std::exp(ln_); }
    double log10() const { return ln_ / std::numbers::ln10; }

    bool is_zero() const { return std::isinf(ln_) && ln_ < 0; }
    bool is_one() const { return ln_ == 0.0; }

    friend bool operator==(LogProb a, LogProb b) { return a.ln_ == b.ln_; }
    friend auto operator<=>(LogProb a, LogProb b) { return a.ln_ <=> b.ln_; }

private:
    double ln_;
};

/// ln C(n, k). Throws std::domain_error if k > n.
///
/// Uses direct log summation when min(k, n-k) is small (lgamma cancellation
/// would otherwise cost accuracy at large n), lgamma otherwise. Relative
/// error <= 1e-12 for n up to 1e6.
double log_binomial(long n, long k);

/// ln P(X >= threshold) for X ~ Binomial(n, p).
///
/// threshold == 0 yields ln 1; threshold == n+1 yields exactly zero
/// probability. Summed term-by-term with a ratio recurrence; once past the
/// mode the summation stops when the geometric bound on the remaining mass
/// drops below 1e-16 of the accumulated sum.
LogProb log_binomial_tail(long n, long threshold, double p);

/// 1 - (1-p)^m evaluated stably (expm1/log1p), no cancellation for tiny p.
double complement_power(double p, long m);

/// Same in log space: takes and returns ln-probabilities.
LogProb complement_power(LogProb p, long m);

/// ln(1 - e^x) for x <= 0.
double log1m_exp(double x);

/// ln sum exp(t_i), max-shifted. Throws std::domain_error on empty input.
double log_sum_exp(std::span<const double> terms);

} // namespace ramp

#endif
