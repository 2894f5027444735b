// Test-only exact oracles. Everything here is independent of the library's
// log-space evaluation paths: plain big-integer/rational arithmetic, summed
// in full with no truncation and no log-space tricks.
#ifndef RAMP_TESTS_ORACLE_SUPPORT_HPP
#define RAMP_TESTS_ORACLE_SUPPORT_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_100;

inline const BigInt& factorial(unsigned long n) {
    static std::vector<BigInt> cache{1, 1};
    while (cache.size() <= n) {
        BigInt next = cache.back() * cache.size();
        cache.push_back(std::move(next));
    }
    return cache[n];
}

/// C(n,k) from factorials, deliberately not the multiplicative recurrence
/// the library uses internally. factorial(n) is materialized first: cpp_int
/// expression templates hold references into the cache, which must not grow
/// while an expression is pending.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return 0;
    }
    const BigInt num = factorial(n);
    return num / (factorial(k) * factorial(n - k));
}

inline double ln_of(const BigInt& x) {
    return static_cast<double>(log(BigFloat(x)));
}

inline double ln_of(const BigRational& x) {
    return static_cast<double>(log(BigFloat(x)));
}

inline double to_double(const BigRational& x) {
    return x.convert_to<double>();
}

/// Exact P(Binomial(n, p) >= threshold), full summation over all terms:
/// sum C(n,i) a^i (b-a)^(n-i) / b^n with p = a/b.
inline BigRational binomial_tail(unsigned long n, unsigned long threshold,
                                 const BigRational& p) {
    if (threshold > n) {
        return 0;
    }
    const BigInt a = numerator(p);
    const BigInt b = denominator(p);
    if (a == b) {
        return 1; // p == 1
    }
    const BigInt c = b - a;

    BigInt a_pow = pow(a, static_cast<unsigned>(threshold));
    BigInt c_pow = pow(c, static_cast<unsigned>(n - threshold));
    BigInt num = 0;
    for (unsigned long i = threshold; i <= n; ++i) {
        num += binomial(n, i) * a_pow * c_pow;
        if (i < n) {
            a_pow *= a;
            c_pow /= c;
        }
    }
    return BigRational(num, pow(b, static_cast<unsigned>(n)));
}

/// Exact sum_{i<=t} C(n,i) / 2^(n-k), uncapped.
inline BigRational syndrome_sphere_fraction(unsigned long n, unsigned long k,
                                            unsigned long t) {
    BigInt spheres = 0;
    for (unsigned long i = 0; i <= t; ++i) {
        spheres += binomial(n, i);
    }
    return BigRational(spheres, BigInt(1) << (n - k));
}

} // namespace oracle

#endif
