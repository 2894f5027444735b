#include "ramp/oracle.hpp"

#include "ramp/exact.hpp"
#include "ramp/rng.hpp"

#include <cmath>
#include <vector>

namespace ramp {

namespace {

enum class BlockOutcome : int { Ok = 0, Due = 1, Nde = 2 };

struct ReadResult {
    int blocks_read = 0;
    bool failed = false;  // logical DUE
    bool corrupt = false; // returned data silently wrong
};

/// Sequential fallback: DUE moves to the next replica, anything else stops.
ReadResult read_primary_backup(const std::vector<BlockOutcome>& v) {
    ReadResult r;
    for (size_t i = 0; i < v.size(); ++i) {
        r.blocks_read = static_cast<int>(i) + 1;
        if (v[i] != BlockOutcome::Due) {
            r.corrupt = v[i] == BlockOutcome::Nde;
            return r;
        }
    }
    r.failed = true;
    return r;
}

/// Sequential K-of-N collection: keep reading until K non-DUE blocks are in
/// hand or the replicas run out.
ReadResult read_erasure(const std::vector<BlockOutcome>& v, int k) {
    ReadResult r;
    int successes = 0;
    bool any_nde = false;
    for (size_t i = 0; i < v.size(); ++i) {
        r.blocks_read = static_cast<int>(i) + 1;
        if (v[i] != BlockOutcome::Due) {
            ++successes;
            any_nde = any_nde || v[i] == BlockOutcome::Nde;
            if (successes == k) {
                r.corrupt = any_nde;
                return r;
            }
        }
    }
    r.failed = true;
    return r;
}

ReadResult read_scheme(const std::vector<BlockOutcome>& v,
                       const Scheme& scheme) {
    return scheme.kind == Scheme::Kind::ErasureCode
               ? read_erasure(v, scheme.data_blocks)
               : read_primary_backup(v);
}

int base_reads(const Scheme& scheme) {
    return scheme.kind == Scheme::Kind::ErasureCode ? scheme.data_blocks : 1;
}

ValidationVerdict make_verdict(std::string name, double analytic,
                               double empirical, double std_error,
                               double expected_events, std::uint64_t trials,
                               std::uint64_t seed, double z_threshold) {
    ValidationVerdict v;
    v.name = std::move(name);
    v.analytic = analytic;
    v.empirical = empirical;
    v.std_error = std_error;
    v.trials = trials;
    v.seed = seed;
    v.low_events = expected_events < 10.0;
    if (std_error > 0.0) {
        v.z = (empirical - analytic) / std_error;
        v.pass = std::abs(v.z) <= z_threshold;
    } else {
        v.z = 0.0;
        v.pass = empirical == analytic;
    }
    return v;
}

} // namespace

SchemeExact enumerate_scheme(double p_due, double p_nde,
                             const Scheme& scheme) {
    scheme.validate();
    if (scheme.total_blocks > 20) {
        throw std::domain_error("enumerate_scheme: N > 20");
    }
    if (!(p_due >= 0.0 && p_nde >= 0.0 && p_due + p_nde <= 1.0)) {
        throw std::domain_error("enumerate_scheme: invalid probabilities");
    }

    using exact::BigRational;
    const BigRational rd(p_due); // doubles are dyadic, conversion is exact
    const BigRational rn(p_nde);
    const BigRational mass[3] = {BigRational(1) - rd - rn, rd, rn};

    const int n = scheme.total_blocks;
    BigRational total = 0, p_fail = 0, p_corrupt = 0, expected_reads = 0;
    std::vector<BlockOutcome> v(static_cast<size_t>(n), BlockOutcome::Ok);

    // Odometer over {ok, due, nde}^N.
    while (true) {
        BigRational p = 1;
        for (BlockOutcome o : v) {
            p *= mass[static_cast<int>(o)];
        }
        total += p;
        const ReadResult r = read_scheme(v, scheme);
        if (r.failed) {
            p_fail += p;
        }
        if (r.corrupt) {
            p_corrupt += p;
        }
        expected_reads += p * r.blocks_read;

        int pos = 0;
        while (pos < n && v[static_cast<size_t>(pos)] == BlockOutcome::Nde) {
            v[static_cast<size_t>(pos)] = BlockOutcome::Ok;
            ++pos;
        }
        if (pos == n) {
            break;
        }
        v[static_cast<size_t>(pos)] =
            static_cast<BlockOutcome>(static_cast<int>(v[static_cast<size_t>(pos)]) + 1);
    }

    if (total != 1) {
        throw std::logic_error("enumerate_scheme: outcome masses do not sum to 1");
    }

    SchemeExact out;
    out.p_lb_due = p_fail.convert_to<double>();
    out.a_r = (expected_reads - base_reads(scheme)).convert_to<double>();
    out.p_any_nde = p_corrupt.convert_to<double>();
    return out;
}

std::pair<ValidationVerdict, ValidationVerdict>
montecarlo_scheme(double p_due, double p_nde, const Scheme& scheme,
                  std::uint64_t trials, std::uint64_t seed,
                  double analytic_p_lb_due, double analytic_a_r,
                  double z_threshold) {
    scheme.validate();
    if (trials < 10000) {
        throw std::invalid_argument("montecarlo_scheme: trials must be >= 1e4");
    }
    if (!(p_due >= 0.0 && p_nde >= 0.0 && p_due + p_nde <= 1.0)) {
        throw std::domain_error("montecarlo_scheme: invalid probabilities");
    }

    const int n = scheme.total_blocks;
    std::uint64_t failures = 0;
    std::uint64_t extra_sum = 0;   // integer accumulation: order-insensitive
    std::uint64_t extra_sumsq = 0;

    std::vector<BlockOutcome> v(static_cast<size_t>(n));
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        TrialRng rng(seed, trial);
        for (int i = 0; i < n; ++i) {
            const double u = rng.next_uniform();
            v[static_cast<size_t>(i)] = u < p_due ? BlockOutcome::Due
                                       : u < p_due + p_nde ? BlockOutcome::Nde
                                                           : BlockOutcome::Ok;
        }
        const ReadResult r = read_scheme(v, scheme);
        if (r.failed) {
            ++failures;
        }
        const std::uint64_t extra =
            static_cast<std::uint64_t>(r.blocks_read - base_reads(scheme));
        extra_sum += extra;
        extra_sumsq += extra * extra;
    }

    const double ft = static_cast<double>(trials);
    const double emp_p = static_cast<double>(failures) / ft;
    const double se_p = std::sqrt(
        std::max(0.0, analytic_p_lb_due * (1.0 - analytic_p_lb_due)) / ft);
    ValidationVerdict due = make_verdict(
        scheme.name() + ".p_lb_due", analytic_p_lb_due, emp_p, se_p,
        analytic_p_lb_due * ft, trials, seed, z_threshold);

    const double mean = static_cast<double>(extra_sum) / ft;
    const double var =
        std::max(0.0, static_cast<double>(extra_sumsq) / ft - mean * mean);
    const double se_ar = std::sqrt(var / ft);
    ValidationVerdict ar =
        make_verdict(scheme.name() + ".a_r", analytic_a_r, mean, se_ar,
                     analytic_a_r * ft, trials, seed, z_threshold);

    return {due, ar};
}

std::pair<ValidationVerdict, ValidationVerdict>
montecarlo_bits(const CodeSpec& code, double rber, std::uint64_t trials,
                std::uint64_t seed, double analytic_p_c_due,
                double analytic_p_c_nde, double z_threshold) {
    if (!(rber > 0.0 && rber < 1.0)) {
        throw std::domain_error("montecarlo_bits: rber outside (0,1)");
    }
    const double n = static_cast<double>(code.codeword_bits);
    if (rber * n * static_cast<double>(trials) < 100.0) {
        throw std::invalid_argument(
            "montecarlo_bits: rber*n*trials < 100, uncorrectable events "
            "unobservable at this rate; inflate rber or trials");
    }

    const double q_mis =
        code.correctable == 0 ? 0.0 : code.q_miscorrect.linear();
    const double pmf0 = std::exp(n * std::log1p(-rber));

    std::uint64_t due_count = 0, nde_count = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        TrialRng rng(seed, trial);
        long errors = 0;
        if (pmf0 > 0.0) {
            // CDF inversion via the pmf ratio recurrence.
            const double u = rng.next_uniform();
            double pmf = pmf0;
            double cdf = pmf;
            while (u > cdf && errors < code.codeword_bits) {
                ++errors;
                pmf *= (n - static_cast<double>(errors) + 1.0) /
                       static_cast<double>(errors) * rber / (1.0 - rber);
                cdf += pmf;
            }
        } else {
            // (1-p)^n underflows; fall back to per-bit draws.
            for (int b = 0; b < code.codeword_bits; ++b) {
                errors += rng.next_uniform() < rber ? 1 : 0;
            }
        }
        if (errors > code.correctable) {
            if (rng.next_uniform() < q_mis) {
                ++nde_count;
            } else {
                ++due_count;
            }
        }
    }

    const double ft = static_cast<double>(trials);
    auto verdict = [&](const char* name, double analytic,
                       std::uint64_t count) {
        const double se =
            std::sqrt(std::max(0.0, analytic * (1.0 - analytic)) / ft);
        return make_verdict(name, analytic, static_cast<double>(count) / ft,
                            se, analytic * ft, trials, seed, z_threshold);
    };
    return {verdict("p_c_due", analytic_p_c_due, due_count),
            verdict("p_c_nde", analytic_p_c_nde, nde_count)};
}

} // namespace ramp
