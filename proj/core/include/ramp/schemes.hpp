#ifndef RAMP_SCHEMES_HPP
#define RAMP_SCHEMES_HPP

#include "ramp/codes.hpp"
#include "ramp/numerics.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramp {

/// Replication layout for one logical block. Static and homogeneous: the
/// same CodeSpec protects all N physical blocks.
struct Scheme {
    enum class Kind { Baseline, PrimaryBackup, ErasureCode };

    Kind kind = Kind::Baseline;
    int total_blocks = 1; // N
    int data_blocks = 1;  // K (ErasureCode only; 1 for PB and Baseline)

    static Scheme baseline() { return {Kind::Baseline, 1, 1}; }
    static Scheme primary_backup(int n);
    static Scheme erasure_code(int n, int k);

    std::string name() const;
    void validate() const;
};

/// Which form of the expected-extra-reads sums to evaluate. AsPrinted keeps
/// the published sums, normalization defects and all; Corrected is the exact
/// expectation of the sequential read procedure (arbitrated against the
/// oracle module's enumeration).
enum class ArVariant {
    AsPrinted,
    Corrected,
};

struct ReliabilityReport {
    LogProb p_c_due;
    LogProb p_c_nde;
    LogProb p_b_due;
    LogProb p_b_nde; // per individual replica, lower reliability bound
    LogProb p_lb_due;
    double a_r = 0.0;
    double overhead_total = 0.0;
    CodeSpec code;
    MemoryConfig cfg;
    Scheme scheme;
};

/// Block failure from a cache-line (or codeword) failure probability:
/// 1 - (1 - p_c)^exponent, identical for DUE and NDE inputs.
LogProb block_fail_prob(LogProb p_c, const CodeSpec& code,
                        const MemoryConfig& cfg);

/// Primary-backup logical DUE: all N replicas fail, p_b^N.
LogProb pb_logical_due(LogProb p_b, int n);

/// Primary-backup expected additional reads.
/// AsPrinted: -1 + sum_{i=0}^{N-1} p^i (1-p) (i+1). The sum omits the
/// all-N-fail outcome (mass 1 - p^N), which is invisible at the model's
/// operating p but wrong at large p. Corrected adds the missing outcome and
/// equals the exact expectation for all p. AsPrinted is the default.
double pb_extra_reads(double p_b, int n,
                      ArVariant variant = ArVariant::AsPrinted);

/// Erasure-coding logical DUE: at least N-K+1 block failures.
LogProb ec_logical_due(LogProb p_b, int n, int k);

/// Erasure-coding expected additional reads.
/// AsPrinted: -K + sum_{i=0}^{N-K} C(N,K+i) C(K+i-1,i) p^i (1-p)^{K-1} (K+i);
/// the C(N,K+i) factor makes the p->0 limit K*(C(N,K)-1) instead of 0.
/// Corrected: the negative-binomial expectation of the sequential K-of-N
/// read, including the exhausted-read outcome, exact for all p. Corrected is
/// the default.
double ec_extra_reads(double p_b, int n, int k,
                      ArVariant variant = ArVariant::Corrected);

/// Full pipeline: cache line -> block -> logical block for one configuration.
ReliabilityReport analyze(const CodeSpec& code, const MemoryConfig& cfg,
                          const Scheme& scheme);

struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(std::string binding_constraint)
        : std::runtime_error("no code strength satisfies the target (" +
                             binding_constraint + ")"),
          binding(std::move(binding_constraint)) {}
    std::string binding;
};

/// Minimal code strength t (scanning up from 0, both targets are monotone
/// in t) such that p_lb_due <= target_due and, when given, the per-replica
/// p_b_nde <= target_nde. Throws InfeasibleError past t_max.
ReliabilityReport optimize(const MemoryConfig& cfg, const Scheme& scheme,
                           LogProb target_due,
                           std::optional<LogProb> target_nde,
                           int data_bits = 2048, int t_max = 512);

enum class SweepAxis { CodeStrength, BlockBytes, Replicas };
enum class SweepMode { Raw, OverheadAtTarget };

struct SweepRow {
    long axis_value = 0;
    bool feasible = true;
    double overhead_total = 0.0;
    LogProb p_lb_due;
    LogProb p_b_nde;
    double a_r = 0.0;
};

struct SweepTable {
    SweepAxis axis = SweepAxis::CodeStrength;
    SweepMode mode = SweepMode::Raw;
    std::vector<SweepRow> rows;
};

struct SweepSpec {
    SweepAxis axis = SweepAxis::CodeStrength;
    std::vector<long> range;
    SweepMode mode = SweepMode::Raw;
    std::optional<LogProb> target_due;
    std::optional<LogProb> target_nde;
};

/// One row per axis value, sorted ascending. Raw mode evaluates analyze();
/// target mode runs the optimizer per row and reports its minimal overhead.
/// Infeasible rows are emitted with feasible=false, never dropped.
SweepTable sweep(const SweepSpec& spec, const CodeSpec& base_code,
                 const MemoryConfig& cfg, const Scheme& scheme);

} // namespace ramp

#endif
