#ifndef RAMP_CODES_HPP
#define RAMP_CODES_HPP

#include "ramp/numerics.hpp"

namespace ramp {

/// How the uncorrectable-tail sum weights the non-erroneous bits.
///
/// The published form of the cache-line DUE sum weights every bit with the
/// error rate, which collapses the sum to a constant independent of the
/// error count. SuccessComplement replaces that weight with (1-RBER)^{n-i}
/// and is the default; the published form stays available for comparison.
enum class TailVariant {
    SuccessComplement,
    AsPrinted,
};

/// Where the uncorrectable region starts: a t-error-correcting code corrects
/// exactly t errors, so MoreThanT (i >= t+1) is the default. AtLeastT is a
/// sensitivity knob.
enum class TailThreshold {
    MoreThanT,
    AtLeastT,
};

/// Whether block failure compounds over cache lines per block (b/c) or over
/// codewords per block (8b/k). The two differ once a codeword spans several
/// cache lines.
enum class BlockGranularity {
    CacheLines,
    Codewords,
};

/// A BCH(n, k, t) code. n is derived: n = k + t * (ceil(log2 k) + 1).
struct CodeSpec {
    int data_bits = 2048;       // k
    int correctable = 22;       // t
    int codeword_bits = 2312;   // n, derived
    LogProb q_miscorrect;       // derived; zero when t == 0

    int check_bits() const { return codeword_bits - data_bits; }
};

struct MemoryConfig {
    double rber = 2e-4;
    int cache_line_bytes = 64;
    int block_bytes = 64;
    /// Fraction of the data size consumed by the performance tier's
    /// protection bits. Calibration constant: with BCH(2312,2048,22) the
    /// total lands on 27.0%.
    double perf_tier_overhead = 0.1411;
    /// Probability that an error event reaches the storage-optimized tier.
    double perf_filter = 1.0;
    BlockGranularity granularity = BlockGranularity::CacheLines;
    TailVariant tail_variant = TailVariant::SuccessComplement;
    TailThreshold tail_threshold = TailThreshold::MoreThanT;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;

    /// Exponent used by block_fail_prob.
    long blocks_exponent(const CodeSpec& code) const;
};

/// Build a CodeSpec from (k, t), deriving n and the miscorrection fraction.
/// Throws std::domain_error for k < 2 or t < 0.
CodeSpec bch_code(int k, int t);

/// Fraction of the 2^(n-k) syndrome space claimed by the decoding spheres:
/// min(1, sum_{i<=t} C(n,i) / 2^(n-k)). This is the standard
/// bounded-distance estimate of the silently-miscorrected share.
/// Exact big-integer evaluation when n-k <= 1024, log-space otherwise.
/// Throws std::domain_error when t == 0 (no decoding spheres).
LogProb miscorrection_fraction(int n, int k, int t);

/// p_c,due: perf_filter * P(Binomial(n, RBER) > t) * (1 - q_miscorrect).
LogProb cache_line_due(const CodeSpec& code, const MemoryConfig& cfg);

/// p_c,nde: perf_filter * P(Binomial(n, RBER) > t) * q_miscorrect.
/// Throws std::domain_error when t == 0.
LogProb cache_line_nde(const CodeSpec& code, const MemoryConfig& cfg);

/// Per-replica storage overhead: perf_tier_overhead + (n-k)/k.
double storage_overhead(const CodeSpec& code, const MemoryConfig& cfg);

} // namespace ramp

#endif
