#include "ramp/codes.hpp"

#include "ramp/exact.hpp"

#include <algorithm>
#include <bit>
#include <vector>

namespace ramp {

namespace {

int ceil_log2(int k) {
    return static_cast<int>(std::bit_width(static_cast<unsigned>(k - 1)));
}

long tail_threshold_of(const CodeSpec& code, const MemoryConfig& cfg) {
    return cfg.tail_threshold == TailThreshold::MoreThanT
               ? code.correctable + 1
               : std::max(code.correctable, 1);
}

/// Uncorrectable-tail probability of one codeword, before the DUE/NDE split.
LogProb uncorrectable_tail(const CodeSpec& code, const MemoryConfig& cfg) {
    const long n = code.codeword_bits;
    const long thr = tail_threshold_of(code, cfg);
    if (cfg.tail_variant == TailVariant::SuccessComplement) {
        return log_binomial_tail(n, thr, cfg.rber);
    }
    // As printed: sum C(n,i) RBER^i RBER^(n-i) = RBER^n * sum_{i>=thr} C(n,i).
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(n - thr + 1));
    for (long i = thr; i <= n; ++i) {
        terms.push_back(log_binomial(n, i));
    }
    if (terms.empty()) {
        return LogProb::zero();
    }
    const double ln = static_cast<double>(n) * std::log(cfg.rber) +
                      log_sum_exp(terms);
    return LogProb::from_ln(std::min(ln, 0.0));
}

LogProb scale(LogProb p, double factor_ln) {
    if (p.is_zero()) {
        return p;
    }
    return LogProb::from_ln(p.ln() + factor_ln);
}

} // namespace

void MemoryConfig::validate() const {
    if (!(rber > 0.0 && rber < 1.0)) {
        throw std::invalid_argument("rber must be in (0,1)");
    }
    if (cache_line_bytes <= 0 || block_bytes <= 0 ||
        block_bytes % cache_line_bytes != 0) {
        throw std::invalid_argument(
            "block_bytes must be a positive multiple of cache_line_bytes");
    }
    if (perf_tier_overhead < 0.0) {
        throw std::invalid_argument("perf_tier_overhead must be >= 0");
    }
    if (!(perf_filter > 0.0 && perf_filter <= 1.0)) {
        throw std::invalid_argument("perf_filter must be in (0,1]");
    }
}

long MemoryConfig::blocks_exponent(const CodeSpec& code) const {
    if (granularity == BlockGranularity::CacheLines) {
        return block_bytes / cache_line_bytes;
    }
    const long block_bits = 8L * block_bytes;
    // Codeword granularity: at least one codeword per block.
    return std::max(1L, block_bits / code.data_bits);
}

CodeSpec bch_code(int k, int t) {
    if (k < 2) {
        throw std::domain_error("bch_code: k must be >= 2");
    }
    if (t < 0) {
        throw std::domain_error("bch_code: t must be >= 0");
    }
    CodeSpec code;
    code.data_bits = k;
    code.correctable = t;
    code.codeword_bits = k + t * (ceil_log2(k) + 1);
    code.q_miscorrect =
        t == 0 ? LogProb::zero() : miscorrection_fraction(code.codeword_bits, k, t);
    return code;
}

LogProb miscorrection_fraction(int n, int k, int t) {
    if (t < 1) {
        throw std::domain_error("miscorrection_fraction: t must be >= 1");
    }
    if (n <= k) {
        throw std::domain_error("miscorrection_fraction: n must exceed k");
    }
    const int check = n - k;
    double ln_q;
    if (check <= 1024) {
        exact::BigInt spheres = 0;
        for (int i = 0; i <= t; ++i) {
            spheres += exact::binomial(static_cast<unsigned long>(n),
                                       static_cast<unsigned long>(i));
        }
        ln_q = exact::log_of(spheres) -
               static_cast<double>(check) * std::numbers::ln2;
    } else {
        std::vector<double> terms;
        terms.reserve(static_cast<size_t>(t) + 1);
        for (int i = 0; i <= t; ++i) {
            terms.push_back(log_binomial(n, i));
        }
        ln_q = log_sum_exp(terms) -
               static_cast<double>(check) * std::numbers::ln2;
    }
    return LogProb::from_ln(std::min(ln_q, 0.0));
}

LogProb cache_line_due(const CodeSpec& code, const MemoryConfig& cfg) {
    cfg.validate();
    const LogProb tail = uncorrectable_tail(code, cfg);
    const double ln_detected = code.correctable == 0
                                   ? 0.0
                                   : log1m_exp(code.q_miscorrect.ln());
    return scale(tail, std::log(cfg.perf_filter) + ln_detected);
}

LogProb cache_line_nde(const CodeSpec& code, const MemoryConfig& cfg) {
    if (code.correctable == 0) {
        throw std::domain_error("cache_line_nde: t == 0 has no miscorrection");
    }
    cfg.validate();
    const LogProb tail = uncorrectable_tail(code, cfg);
    if (code.q_miscorrect.is_zero()) {
        return LogProb::zero();
    }
    return scale(tail, std::log(cfg.perf_filter) + code.q_miscorrect.ln());
}

double storage_overhead(const CodeSpec& code, const MemoryConfig& cfg) {
    return cfg.perf_tier_overhead +
           static_cast<double>(code.check_bits()) /
               static_cast<double>(code.data_bits);
}

} // namespace ramp
