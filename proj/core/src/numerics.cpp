#include "ramp/numerics.hpp"

#include <algorithm>
#include <vector>

namespace ramp {

double log_binomial(long n, long k) {
    if (n < 0 || k < 0) {
        throw std::domain_error("log_binomial: negative argument");
    }
    if (k > n) {
        throw std::domain_error("log_binomial: k > n");
    }
    const long m = std::min(k, n - k);
    if (m == 0) {
        return 0.0;
    }
    if (m <= 1000) {
        // ln C(n,k) = sum ln((n-i)/(i+1)); avoids lgamma cancellation when
        // the result is small relative to lgamma(n).
        double acc = 0.0;
        for (long i = 0; i < m; ++i) {
            acc += std::log(static_cast<double>(n - i)) -
                   std::log(static_cast<double>(i + 1));
        }
        return acc;
    }
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

double log1m_exp(double x) {
    if (x > 0.0) {
        throw std::domain_error("log1m_exp: argument must be <= 0");
    }
    if (x == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    // Split at -ln 2 for accuracy (Maechler's recipe).
    if (x > -std::numbers::ln2) {
        return std::log(-std::expm1(x));
    }
    return std::log1p(-std::exp(x));
}

double log_sum_exp(std::span<const double> terms) {
    if (terms.empty()) {
        throw std::domain_error("log_sum_exp: empty input");
    }
    const double mx = *std::max_element(terms.begin(), terms.end());
    if (std::isinf(mx) && mx < 0) {
        return mx; // all terms are ln 0
    }
    double acc = 0.0;
    for (double t : terms) {
        acc += std::exp(t - mx);
    }
    return mx + std::log(acc);
}

LogProb log_binomial_tail(long n, long threshold, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("log_binomial_tail: p outside [0,1]");
    }
    if (n < 0 || threshold < 0 || threshold > n + 1) {
        throw std::domain_error("log_binomial_tail: bad n/threshold");
    }
    if (threshold == 0) {
        return LogProb::one();
    }
    if (threshold == n + 1) {
        return LogProb::zero();
    }
    if (p == 0.0) {
        return LogProb::zero();
    }
    if (p == 1.0) {
        return LogProb::one(); // threshold <= n, all n errors certain
    }

    const double lp = std::log(p);
    const double lq = std::log1p(-p);

    // First term at i = threshold, then the ratio recurrence
    //   term_{i+1}/term_i = (n-i)/(i+1) * p/(1-p).
    // Terms are summed in linear space scaled by the running maximum.
    double log_term = log_binomial(n, threshold) +
                      static_cast<double>(threshold) * lp +
                      static_cast<double>(n - threshold) * lq;
    double log_max = log_term;
    double scaled_sum = 1.0; // sum of exp(log_term_i - log_max)
    const double odds = p / (1.0 - p);

    for (long i = threshold; i < n; ++i) {
        const double ratio =
            static_cast<double>(n - i) / static_cast<double>(i + 1) * odds;
        log_term += std::log(ratio);
        if (log_term > log_max) {
            scaled_sum = scaled_sum * std::exp(log_max - log_term) + 1.0;
            log_max = log_term;
        } else {
            const double term = std::exp(log_term - log_max);
            scaled_sum += term;
            // Past the mode the tail is geometric with ratio < 1; stop when
            // the bound on the remaining mass is negligible.
            if (ratio < 0.9999 &&
                term * ratio / (1.0 - ratio) < 1e-16 * scaled_sum) {
                break;
            }
        }
    }
    // Rounding can push a tail of ~1 a few ulp above ln 0; clamp.
    return LogProb::from_ln(std::min(0.0, log_max + std::log(scaled_sum)));
}

double complement_power(double p, long m) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("complement_power: p outside [0,1]");
    }
    if (m < 1) {
        throw std::domain_error("complement_power: m must be >= 1");
    }
    if (p == 1.0) {
        return 1.0;
    }
    return -std::expm1(static_cast<double>(m) * std::log1p(-p));
}

LogProb complement_power(LogProb p, long m) {
    if (m < 1) {
        throw std::domain_error("complement_power: m must be >= 1");
    }
    if (p.is_zero()) {
        return LogProb::zero();
    }
    if (p.is_one()) {
        return LogProb::one();
    }
    // Below exp()'s underflow range the union bound is exact to more digits
    // than a double holds: ln(1 - (1-p)^m) = ln(mp) + O(mp).
    if (p.ln() < -700.0) {
        return LogProb::from_ln(p.ln() + std::log(static_cast<double>(m)));
    }
    // ln(1 - (1-p)^m) = log1m_exp(m * log1m_exp(ln p))
    return LogProb::from_ln(
        log1m_exp(static_cast<double>(m) * log1m_exp(p.ln())));
}

} // namespace ramp
