#include "ramp/schemes.hpp"

#include <algorithm>
#include <cmath>

namespace ramp {

Scheme Scheme::primary_backup(int n) {
    Scheme s{Kind::PrimaryBackup, n, 1};
    s.validate();
    return s;
}

Scheme Scheme::erasure_code(int n, int k) {
    Scheme s{Kind::ErasureCode, n, k};
    s.validate();
    return s;
}

void Scheme::validate() const {
    switch (kind) {
    case Kind::Baseline:
        if (total_blocks != 1 || data_blocks != 1) {
            throw std::invalid_argument("baseline requires N = K = 1");
        }
        break;
    case Kind::PrimaryBackup:
        if (total_blocks < 1 || data_blocks != 1) {
            throw std::invalid_argument("primary-backup requires N >= 1, K = 1");
        }
        break;
    case Kind::ErasureCode:
        if (data_blocks < 1 || total_blocks <= data_blocks) {
            throw std::invalid_argument("erasure code requires N > K >= 1");
        }
        break;
    }
}

std::string Scheme::name() const {
    switch (kind) {
    case Kind::Baseline:
        return "baseline";
    case Kind::PrimaryBackup:
        return "pb" + std::to_string(total_blocks);
    case Kind::ErasureCode:
        return "ec" + std::to_string(total_blocks) + "_" +
               std::to_string(data_blocks);
    }
    return "unknown";
}

LogProb block_fail_prob(LogProb p_c, const CodeSpec& code,
                        const MemoryConfig& cfg) {
    cfg.validate();
    return complement_power(p_c, cfg.blocks_exponent(code));
}

LogProb pb_logical_due(LogProb p_b, int n) {
    if (n < 1) {
        throw std::domain_error("pb_logical_due: N must be >= 1");
    }
    if (p_b.is_zero()) {
        return LogProb::zero();
    }
    return LogProb::from_ln(static_cast<double>(n) * p_b.ln());
}

double pb_extra_reads(double p_b, int n, ArVariant variant) {
    if (n < 1) {
        throw std::domain_error("pb_extra_reads: N must be >= 1");
    }
    if (!(p_b >= 0.0 && p_b <= 1.0)) {
        throw std::domain_error("pb_extra_reads: p outside [0,1]");
    }
    const double q = 1.0 - p_b;
    if (variant == ArVariant::AsPrinted) {
        double sum = 0.0;
        double pi = 1.0;
        for (int i = 0; i < n; ++i) {
            sum += pi * q * static_cast<double>(i + 1);
            pi *= p_b;
        }
        return sum - 1.0;
    }
    // Exact expectation of the sequential read: the last replica is read
    // after N-1 failures regardless of its own outcome.
    double expected = 0.0;
    double pi = 1.0;
    for (int i = 0; i < n - 1; ++i) {
        expected += q * pi * static_cast<double>(i + 1);
        pi *= p_b;
    }
    expected += pi * static_cast<double>(n);
    return expected - 1.0;
}

LogProb ec_logical_due(LogProb p_b, int n, int k) {
    if (k < 1 || n <= k) {
        throw std::domain_error("ec_logical_due: requires N > K >= 1");
    }
    if (p_b.is_zero()) {
        return LogProb::zero();
    }
    const double lp = p_b.ln();
    const double lq = log1m_exp(lp);
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(k));
    for (int i = n - k + 1; i <= n; ++i) {
        double term = log_binomial(n, i) + static_cast<double>(i) * lp;
        if (i < n) {
            term += static_cast<double>(n - i) * lq;
        }
        terms.push_back(term);
    }
    return LogProb::from_ln(std::min(0.0, log_sum_exp(terms)));
}

namespace {

double ec_fail_prob(double p_b, int n, int k) {
    const double q = 1.0 - p_b;
    double sum = 0.0;
    for (int i = n - k + 1; i <= n; ++i) {
        sum += std::exp(log_binomial(n, i)) * std::pow(p_b, i) *
               std::pow(q, n - i);
    }
    return sum;
}

} // namespace

double ec_extra_reads(double p_b, int n, int k, ArVariant variant) {
    if (k < 1 || n <= k) {
        throw std::domain_error("ec_extra_reads: requires N > K >= 1");
    }
    if (!(p_b >= 0.0 && p_b <= 1.0)) {
        throw std::domain_error("ec_extra_reads: p outside [0,1]");
    }
    const double q = 1.0 - p_b;
    double sum = 0.0;
    if (variant == ArVariant::AsPrinted) {
        for (int i = 0; i <= n - k; ++i) {
            sum += std::exp(log_binomial(n, k + i) + log_binomial(k + i - 1, i)) *
                   std::pow(p_b, i) * std::pow(q, k - 1) *
                   static_cast<double>(k + i);
        }
        return sum - static_cast<double>(k);
    }
    // Negative-binomial expectation of the sequential K-of-N read: the K-th
    // success arrives at read K+i with i failures before it; the exhausted
    // outcome reads all N blocks.
    for (int i = 0; i <= n - k; ++i) {
        sum += std::exp(log_binomial(k + i - 1, i)) * std::pow(p_b, i) *
               std::pow(q, k) * static_cast<double>(k + i);
    }
    sum += ec_fail_prob(p_b, n, k) * static_cast<double>(n);
    return sum - static_cast<double>(k);
}

ReliabilityReport analyze(const CodeSpec& code, const MemoryConfig& cfg,
                          const Scheme& scheme) {
    cfg.validate();
    scheme.validate();

    ReliabilityReport rep;
    rep.code = code;
    rep.cfg = cfg;
    rep.scheme = scheme;

    rep.p_c_due = cache_line_due(code, cfg);
    rep.p_c_nde =
        code.correctable == 0 ? LogProb::zero() : cache_line_nde(code, cfg);
    rep.p_b_due = block_fail_prob(rep.p_c_due, code, cfg);
    rep.p_b_nde = block_fail_prob(rep.p_c_nde, code, cfg);
    rep.overhead_total = storage_overhead(code, cfg);

    const int n = scheme.total_blocks;
    switch (scheme.kind) {
    case Scheme::Kind::Baseline:
        rep.p_lb_due = rep.p_b_due;
        rep.a_r = 0.0;
        break;
    case Scheme::Kind::PrimaryBackup:
        rep.p_lb_due = pb_logical_due(rep.p_b_due, n);
        rep.a_r = pb_extra_reads(rep.p_b_due.linear(), n);
        break;
    case Scheme::Kind::ErasureCode:
        rep.p_lb_due = ec_logical_due(rep.p_b_due, n, scheme.data_blocks);
        rep.a_r = ec_extra_reads(rep.p_b_due.linear(), n, scheme.data_blocks);
        break;
    }
    return rep;
}

ReliabilityReport optimize(const MemoryConfig& cfg, const Scheme& scheme,
                           LogProb target_due,
                           std::optional<LogProb> target_nde, int data_bits,
                           int t_max) {
    if (target_due.is_zero()) {
        throw std::invalid_argument("optimize: target_due must be positive");
    }
    bool due_ever = false;
    for (int t = 0; t <= t_max; ++t) {
        const ReliabilityReport rep = analyze(bch_code(data_bits, t), cfg, scheme);
        const bool due_ok = rep.p_lb_due <= target_due;
        const bool nde_ok = !target_nde || rep.p_b_nde <= *target_nde;
        due_ever = due_ever || due_ok;
        if (due_ok && nde_ok) {
            return rep;
        }
    }
    throw InfeasibleError(due_ever ? "nde" : "due");
}

SweepTable sweep(const SweepSpec& spec, const CodeSpec& base_code,
                 const MemoryConfig& cfg, const Scheme& scheme) {
    if (spec.range.empty()) {
        throw std::invalid_argument("sweep: empty range");
    }
    if (spec.mode == SweepMode::OverheadAtTarget) {
        if (!spec.target_due) {
            throw std::invalid_argument(
                "sweep: overhead-at-target mode requires target_due");
        }
        if (spec.axis == SweepAxis::CodeStrength) {
            throw std::invalid_argument(
                "sweep: code-strength axis is meaningless in "
                "overhead-at-target mode (the optimizer chooses t)");
        }
    }
    if (spec.axis == SweepAxis::Replicas &&
        scheme.kind == Scheme::Kind::Baseline) {
        throw std::invalid_argument("sweep: baseline has no replica axis");
    }

    std::vector<long> values = spec.range;
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
        throw std::invalid_argument("sweep: duplicate axis values");
    }

    SweepTable table;
    table.axis = spec.axis;
    table.mode = spec.mode;
    table.rows.reserve(values.size());

    for (long v : values) {
        CodeSpec code = base_code;
        MemoryConfig row_cfg = cfg;
        Scheme row_scheme = scheme;
        switch (spec.axis) {
        case SweepAxis::CodeStrength:
            code = bch_code(base_code.data_bits, static_cast<int>(v));
            break;
        case SweepAxis::BlockBytes:
            row_cfg.block_bytes = static_cast<int>(v);
            break;
        case SweepAxis::Replicas:
            row_scheme.total_blocks = static_cast<int>(v);
            row_scheme.validate();
            break;
        }

        SweepRow row;
        row.axis_value = v;
        if (spec.mode == SweepMode::Raw) {
            const ReliabilityReport rep = analyze(code, row_cfg, row_scheme);
            row.overhead_total = rep.overhead_total;
            row.p_lb_due = rep.p_lb_due;
            row.p_b_nde = rep.p_b_nde;
            row.a_r = rep.a_r;
        } else {
            try {
                const ReliabilityReport rep =
                    optimize(row_cfg, row_scheme, *spec.target_due,
                             spec.target_nde, base_code.data_bits);
                row.overhead_total = rep.overhead_total;
                row.p_lb_due = rep.p_lb_due;
                row.p_b_nde = rep.p_b_nde;
                row.a_r = rep.a_r;
            } catch (const InfeasibleError&) {
                row.feasible = false;
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

} // namespace ramp
