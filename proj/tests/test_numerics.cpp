#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_support.hpp"

#include "ramp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace ramp;

namespace {

double rel_err(double got, double want) {
    if (want == 0.0) {
        return std::abs(got);
    }
    return std::abs(got - want) / std::abs(want);
}

} // namespace

TEST_CASE("log_binomial small values") {
    CHECK(log_binomial(5, 3) == doctest::Approx(std::log(10.0)).epsilon(1e-14));
    CHECK(log_binomial(7, 0) == 0.0);
    CHECK(log_binomial(7, 7) == 0.0);
    CHECK(log_binomial(1, 1) == 0.0);
    CHECK_THROWS_AS(log_binomial(3, 4), std::domain_error);
    CHECK_THROWS_AS(log_binomial(-1, 0), std::domain_error);
}

TEST_CASE("log_binomial agrees with exact factorial oracle") {
    // Frozen: ln C(2312,23) from exact big-integer factorials.
    CHECK(rel_err(log_binomial(2312, 23), 126.43850793328372) < 1e-12);

    for (long n : {10L, 30L, 64L, 500L, 2312L}) {
        for (long k = 0; k <= n; k += std::max(1L, n / 7)) {
            const double want = oracle::ln_of(
                oracle::binomial(static_cast<unsigned long>(n),
                                 static_cast<unsigned long>(k)));
            if (want == 0.0) {
                CHECK(log_binomial(n, k) == 0.0);
            } else {
                CHECK(rel_err(log_binomial(n, k), want) < 1e-12);
            }
        }
    }
    // Large-k path (lgamma) keeps the tolerance.
    const double want = oracle::ln_of(oracle::binomial(5000, 2500));
    CHECK(rel_err(log_binomial(5000, 2500), want) < 1e-12);
}

TEST_CASE("log_binomial_tail edges") {
    CHECK(log_binomial_tail(10, 0, 0.3).ln() == 0.0);
    CHECK(log_binomial_tail(10, 11, 0.3).is_zero());
    CHECK(rel_err(log_binomial_tail(2, 2, 0.5).linear(), 0.25) < 1e-14);
    CHECK(log_binomial_tail(10, 3, 0.0).is_zero());
    CHECK(log_binomial_tail(10, 3, 1.0).ln() == 0.0);
    CHECK_THROWS_AS(log_binomial_tail(10, 3, 1.5), std::domain_error);
    CHECK_THROWS_AS(log_binomial_tail(10, 12, 0.5), std::domain_error);
}

TEST_CASE("log_binomial_tail matches exact rational oracle, n <= 30") {
    const std::vector<oracle::BigRational> ps = {
        oracle::BigRational(1, 1000), oracle::BigRational(3, 10),
        oracle::BigRational(1, 2), oracle::BigRational(9, 10)};
    for (unsigned long n = 0; n <= 30; ++n) {
        for (unsigned long thr = 0; thr <= n + 1; ++thr) {
            for (const auto& p : ps) {
                const double pd = oracle::to_double(p);
                const LogProb got = log_binomial_tail(
                    static_cast<long>(n), static_cast<long>(thr), pd);
                const oracle::BigRational want =
                    oracle::binomial_tail(n, thr, p);
                if (want == 0) {
                    CHECK(got.is_zero());
                } else {
                    // Probability-relative tolerance; the ln comparison is
                    // mixed abs/rel because ln(want) passes through zero.
                    const double want_ln = oracle::ln_of(want);
                    CHECK(std::abs(got.ln() - want_ln) <
                          1e-9 * std::max(1.0, std::abs(want_ln)));
                    CHECK(rel_err(got.linear(), oracle::to_double(want)) <
                          1e-9);
                }
            }
        }
    }
}

TEST_CASE("log_binomial_tail at the shipped operating point") {
    // Frozen from the exact rational oracle: P(Bin(2312, 2e-4) >= 23).
    const LogProb got = log_binomial_tail(2312, 23, 2e-4);
    CHECK(rel_err(got.linear(), 4.413219851292968e-31) < 1e-9);
    CHECK(rel_err(got.ln(), -69.89553333475852) < 1e-12);

    // Same point against the runtime oracle.
    const auto want =
        oracle::binomial_tail(2312, 23, oracle::BigRational(1, 5000));
    CHECK(rel_err(got.ln(), oracle::ln_of(want)) < 1e-12);
}

TEST_CASE("log_binomial_tail monotonicity properties") {
    std::mt19937 gen(1234);
    std::uniform_int_distribution<long> nd(1, 400);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    for (int iter = 0; iter < 200; ++iter) {
        const long n = nd(gen);
        const double p = pd(gen);
        double prev = log_binomial_tail(n, 0, p).ln();
        for (long thr = 1; thr <= n + 1; thr += std::max(1L, n / 13)) {
            const double cur = log_binomial_tail(n, thr, p).ln();
            CHECK(cur <= prev + 1e-12); // non-increasing in threshold
            prev = cur;
        }
        const double p2 = p + (1.0 - p) * pd(gen);
        const long thr = 1 + nd(gen) % n;
        CHECK(log_binomial_tail(n, thr, p2).ln() >=
              log_binomial_tail(n, thr, p).ln() - 1e-12);
    }
}

TEST_CASE("complement_power examples") {
    CHECK(complement_power(0.0, 4) == 0.0);
    CHECK(complement_power(0.37, 1) == doctest::Approx(0.37).epsilon(1e-15));
    // Frozen: 1 - 0.999^4 computed exactly.
    CHECK(rel_err(complement_power(1e-3, 4), 0.003994003999) < 1e-12);
    CHECK(complement_power(1.0, 7) == 1.0);
    CHECK_THROWS_AS(complement_power(0.5, 0), std::domain_error);
    CHECK_THROWS_AS(complement_power(-0.1, 2), std::domain_error);
}

TEST_CASE("complement_power stays stable for tiny p") {
    // Naive 1-(1-p)^m would return 0 here.
    CHECK(rel_err(complement_power(1e-30, 4), 4e-30) < 1e-12);
    CHECK(rel_err(complement_power(1e-200, 16), 1.6e-199) < 1e-12);
}

TEST_CASE("complement_power union-bound sandwich and composition") {
    std::mt19937 gen(99);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    std::uniform_int_distribution<long> md(1, 64);
    for (int iter = 0; iter < 500; ++iter) {
        const double p = std::pow(pd(gen), 30.0); // bias toward tiny
        const long a = md(gen);
        const long b = md(gen);
        const double v = complement_power(p, a);
        CHECK(v >= p - 1e-18);
        CHECK(v <= std::min(1.0, static_cast<double>(a) * p) + 1e-15);
        // 1-(1-p)^(a+b) = 1 - (1-f(a))(1-f(b))
        const double lhs = complement_power(p, a + b);
        const double rhs =
            v + complement_power(p, b) - v * complement_power(p, b);
        CHECK(rel_err(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("complement_power log-space path agrees with linear path") {
    for (double p : {0.9, 0.5, 1e-3, 1e-12, 1e-30}) {
        for (long m : {1L, 2L, 16L, 1024L}) {
            const LogProb lg = complement_power(LogProb::from_linear(p), m);
            CHECK(rel_err(lg.linear(), complement_power(p, m)) < 1e-11);
        }
    }
    // Far below exp() underflow the log-space path must keep going.
    const LogProb deep = complement_power(LogProb::from_ln(-2000.0), 4);
    CHECK(deep.ln() ==
          doctest::Approx(-2000.0 + std::log(4.0)).epsilon(1e-12));
}

TEST_CASE("log_sum_exp") {
    const std::vector<double> one = {std::log(0.25), std::log(0.75)};
    CHECK(std::abs(log_sum_exp(one)) < 1e-14);
    const std::vector<double> single = {-3.7};
    CHECK(log_sum_exp(single) == -3.7);
    const std::vector<double> tiny = {std::log(1e-300), std::log(1e-300)};
    CHECK(rel_err(log_sum_exp(tiny), std::log(2e-300)) < 1e-12);
    CHECK_THROWS_AS(log_sum_exp(std::span<const double>{}),
                    std::domain_error);
}

TEST_CASE("LogProb round trip is monotone") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> pd(0.0, 1.0);
    double prev_p = 0.0;
    LogProb prev = LogProb::zero();
    std::vector<double> values;
    for (int i = 0; i < 100; ++i) {
        values.push_back(pd(gen));
    }
    std::sort(values.begin(), values.end());
    for (double p : values) {
        const LogProb lp = LogProb::from_linear(p);
        CHECK(lp >= prev);
        CHECK(lp.linear() >= prev_p);
        prev = lp;
        prev_p = p;
    }
    CHECK_THROWS_AS(LogProb::from_linear(1.5), std::domain_error);
    CHECK(LogProb::zero().is_zero());
    CHECK(LogProb::one().linear() == 1.0);
}
