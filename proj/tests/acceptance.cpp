// Acceptance suite: one TEST_CASE per criterion, each printing a
// [PASS]/[FAIL] line with the reproduced numbers. Criteria assert the
// published claims as stated; where a claim is not attainable from the
// published model the criterion stays red and the notes say why.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_support.hpp"

#include "ramp/codes.hpp"
#include "ramp/numerics.hpp"
#include "ramp/oracle.hpp"
#include "ramp/schemes.hpp"

#include "validate_suite.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace ramp;

namespace {

struct Criterion {
    int id;
    const char* title;
    bool ok = true;
    std::vector<std::string> notes;

    Criterion(int id_, const char* title_) : id(id_), title(title_) {}

    void require(bool cond, const std::string& detail) {
        if (!cond) {
            ok = false;
            notes.push_back(detail);
        }
    }

    void note(const std::string& detail) { notes.push_back(detail); }

    void finish() const {
        std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id,
                    title);
        for (const auto& n : notes) {
            std::printf("        - %s\n", n.c_str());
        }
        std::fflush(stdout);
        CHECK(ok);
    }
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

double rel_err(double got, double want) {
    return want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("criterion 1") {
    Criterion c(1, "analytic logical-DUE and corrected a_r match exact "
                   "enumeration over the probability/scheme grid");
    const double grid[] = {0.5, 0.1, 1e-2, 1e-3};
    double worst_due = 0.0, worst_ar = 0.0;
    for (double p : grid) {
        const LogProb lp = LogProb::from_linear(p);
        for (int n = 1; n <= 6; ++n) {
            const SchemeExact e =
                enumerate_scheme(p, 0.0, Scheme::primary_backup(n));
            worst_due = std::max(
                worst_due,
                rel_err(pb_logical_due(lp, n).linear(), e.p_lb_due));
            worst_ar = std::max(
                worst_ar, std::abs(pb_extra_reads(p, n, ArVariant::Corrected) -
                                   e.a_r));
        }
        for (auto [n, k] : {std::pair{5, 3}, std::pair{4, 2}}) {
            const SchemeExact e =
                enumerate_scheme(p, 0.0, Scheme::erasure_code(n, k));
            worst_due = std::max(
                worst_due,
                rel_err(ec_logical_due(lp, n, k).linear(), e.p_lb_due));
            worst_ar = std::max(
                worst_ar,
                std::abs(ec_extra_reads(p, n, k, ArVariant::Corrected) -
                         e.a_r));
        }
    }
    c.require(worst_due < 1e-12,
              fmt("worst logical-DUE relative error %.3e >= 1e-12", worst_due));
    c.require(worst_ar < 1e-9,
              fmt("worst corrected-a_r absolute error %.3e >= 1e-9", worst_ar));
    c.note(fmt("worst logical-DUE rel err %.3e, worst a_r abs err %.3e",
               worst_due, worst_ar));

    // The published EC a_r sum carries a C(N,K+i) factor that does not go to
    // zero with p; reproduce and report the divergence.
    for (auto [n, k] : {std::pair{5, 3}, std::pair{4, 2}}) {
        const SchemeExact e =
            enumerate_scheme(1e-3, 0.0, Scheme::erasure_code(n, k));
        const double printed = ec_extra_reads(1e-3, n, k, ArVariant::AsPrinted);
        c.require(std::abs(printed - e.a_r) > 1.0,
                  fmt("expected the as-printed EC a_r defect, got |%g - %g|",
                      printed, e.a_r));
        c.note(fmt("as-printed EC a_r divergence reproduced: %.6f vs exact "
                   "%.3e",
                   printed, e.a_r));
    }
    c.finish();
}

TEST_CASE("criterion 2") {
    Criterion c(2, "Monte Carlo (1e7 trials, seed 42) agrees with the "
                   "analytic PB N=3 point at p=0.1 within 4 sigma");
    const SchemeExact e = enumerate_scheme(0.1, 0.0, Scheme::primary_backup(3));
    const auto [due, ar] = montecarlo_scheme(
        0.1, 0.0, Scheme::primary_backup(3), 10000000, 42, 1e-3, e.a_r);
    c.require(due.pass, fmt("logical-DUE z = %.2f exceeds 4", due.z));
    c.require(ar.pass, fmt("a_r z = %.2f exceeds 4", ar.z));
    c.note(fmt("p_lb_due empirical %.6e vs 1e-3 (z = %+.2f)", due.empirical,
               due.z));
    c.note(fmt("a_r empirical %.6e vs exact %.6e", ar.empirical, ar.analytic));
    c.finish();
}

TEST_CASE("criterion 3") {
    Criterion c(3, "baseline anchor: BCH(2312,2048,22) at RBER 2e-4 gives "
                   "27.0%% total overhead and a DUE rate in [1e-34, 1e-30] "
                   "under both performance-filter readings");
    MemoryConfig cfg;
    const CodeSpec code = bch_code(2048, 22);
    const ReliabilityReport base = analyze(code, cfg, Scheme::baseline());
    c.require(std::abs(base.overhead_total - 0.27) <= 5e-4,
              fmt("overhead_total %.8f not 27.0%%", base.overhead_total));
    c.note(fmt("overhead_total = %.8f (27.0%%)", base.overhead_total));
    for (double f : {1.0, 0.018}) {
        MemoryConfig m = cfg;
        m.perf_filter = f;
        const double lg =
            analyze(code, m, Scheme::baseline()).p_lb_due.log10();
        c.require(lg >= -34.0 && lg <= -30.0,
                  fmt("f=%.3f: log10 DUE %.3f outside [-34, -30]", f, lg));
        c.note(fmt("f=%.3f: DUE rate 1e%.3f", f, lg));
    }
    c.finish();
}

TEST_CASE("criterion 4") {
    Criterion c(4, "optimizer trade-off: PB N=3 and EC (5,3) meet the "
                   "baseline DUE target below 27%% within [16%%, 21%%]; "
                   "adding the 1e-22 NDE target costs 2-3 more points");
    MemoryConfig cfg;
    const LogProb target =
        analyze(bch_code(2048, 22), cfg, Scheme::baseline()).p_lb_due;
    const LogProb nde = LogProb::from_linear(1e-22);
    for (const Scheme& s :
         {Scheme::primary_backup(3), Scheme::erasure_code(5, 3)}) {
        const ReliabilityReport due_only =
            optimize(cfg, s, target, std::nullopt);
        const double oh = due_only.overhead_total;
        c.require(oh < 0.27 && oh >= 0.16 && oh <= 0.21,
                  s.name() + fmt(": overhead %.4f outside (0.16, 0.21)", oh));
        const ReliabilityReport with_nde = optimize(cfg, s, target, nde);
        const double delta = (with_nde.overhead_total - oh) * 100.0;
        c.note(s.name() +
               fmt(": %.1f%% at t*=%d, +NDE -> %.1f%% at t*=%d (delta %.2f "
                   "points)",
                   oh * 100.0, due_only.code.correctable,
                   with_nde.overhead_total * 100.0, with_nde.code.correctable,
                   delta));
        c.require(delta >= 2.0 && delta <= 3.0,
                  s.name() +
                      fmt(": NDE delta %.2f points outside [2, 3]; the "
                          "detected-vs-silent split decays ~2.6 decades per "
                          "strength step in this model, so the 1e-22 target "
                          "costs at most two steps",
                          delta));
    }
    c.finish();
}

TEST_CASE("criterion 5") {
    Criterion c(5, "expected extra-read rate a_r < 1e-11 at the optimized "
                   "(DUE + NDE provisioned) operating points");
    MemoryConfig cfg;
    const LogProb target =
        analyze(bch_code(2048, 22), cfg, Scheme::baseline()).p_lb_due;
    const LogProb nde = LogProb::from_linear(1e-22);
    for (const Scheme& s :
         {Scheme::primary_backup(3), Scheme::erasure_code(5, 3)}) {
        const ReliabilityReport r = optimize(cfg, s, target, nde);
        c.require(r.a_r < 1e-11,
                  s.name() + fmt(": a_r %.3e >= 1e-11", r.a_r));
        c.note(s.name() + fmt(": a_r = %.3e", r.a_r));
    }
    c.finish();
}

TEST_CASE("criterion 6") {
    Criterion c(6, "diminishing returns: PB N-sweep 2..6 at the baseline DUE "
                   "target has non-increasing overhead and strictly "
                   "decreasing per-step savings");
    MemoryConfig cfg;
    SweepSpec spec;
    spec.axis = SweepAxis::Replicas;
    spec.range = {2, 3, 4, 5, 6};
    spec.mode = SweepMode::OverheadAtTarget;
    spec.target_due =
        analyze(bch_code(2048, 22), cfg, Scheme::baseline()).p_lb_due;
    const SweepTable t =
        sweep(spec, bch_code(2048, 22), cfg, Scheme::primary_backup(2));
    std::vector<double> savings;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        c.require(t.rows[i].feasible,
                  fmt("N=%.0f infeasible", double(t.rows[i].axis_value)));
        if (i > 0) {
            const double step = (t.rows[i - 1].overhead_total -
                                 t.rows[i].overhead_total) * 100.0;
            c.require(step >= 0.0,
                      fmt("overhead increased at N=%.0f",
                          double(t.rows[i].axis_value)));
            savings.push_back(step);
        }
        c.note(fmt("N=%.0f: overhead %.4f%%", double(t.rows[i].axis_value),
                   t.rows[i].overhead_total * 100.0));
    }
    for (size_t i = 1; i < savings.size(); ++i) {
        c.require(savings[i] < savings[i - 1],
                  fmt("per-step savings not strictly decreasing: %.4f then "
                      "%.4f points; code strength moves in integer steps, so "
                      "consecutive N can land on the same t* and tie",
                      savings[i - 1], savings[i]));
    }
    c.finish();
}

TEST_CASE("criterion 7") {
    Criterion c(7, "log_binomial_tail matches the exact big-rational oracle "
                   "(all n <= 30 and the n=2312 operating point) within 1e-9 "
                   "relative");
    double worst = 0.0;
    const std::vector<oracle::BigRational> ps = {
        oracle::BigRational(1, 1000), oracle::BigRational(3, 10),
        oracle::BigRational(1, 2), oracle::BigRational(9, 10)};
    for (unsigned long n = 0; n <= 30; ++n) {
        for (unsigned long thr = 0; thr <= n + 1; ++thr) {
            for (const auto& p : ps) {
                const LogProb got =
                    log_binomial_tail(static_cast<long>(n),
                                      static_cast<long>(thr),
                                      oracle::to_double(p));
                const auto want = oracle::binomial_tail(n, thr, p);
                if (want == 0) {
                    c.require(got.is_zero(), "nonzero where oracle is zero");
                } else {
                    worst = std::max(
                        worst, rel_err(got.linear(), oracle::to_double(want)));
                }
            }
        }
    }
    const auto anchor =
        oracle::binomial_tail(2312, 23, oracle::BigRational(1, 5000));
    worst = std::max(worst,
                     rel_err(log_binomial_tail(2312, 23, 2e-4).linear(),
                             oracle::to_double(anchor)));
    c.require(worst <= 1e-9, fmt("worst relative error %.3e > 1e-9", worst));
    c.note(fmt("worst relative error %.3e", worst));
    c.finish();
}

TEST_CASE("criterion 8") {
    Criterion c(8, "repeated validate runs with the same seed produce "
                   "byte-identical JSON");
    tool::RunConfig cfg;
    cfg.oracle.trials = 100000;
    cfg.oracle.seed = 42;
    const tool::ValidationRun a = tool::run_validation_suite(cfg);
    const tool::ValidationRun b = tool::run_validation_suite(cfg);
    const std::string sa = a.output.dump(2);
    const std::string sb = b.output.dump(2);
    c.require(sa == sb, "outputs differ between runs");
    c.require(a.all_pass, "validation suite itself reported failures");
    c.note(fmt("%.0f bytes, all_pass = true", double(sa.size())));
    c.finish();
}
