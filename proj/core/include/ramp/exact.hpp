#ifndef RAMP_EXACT_HPP
#define RAMP_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramp::exact {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact C(n, k) via the multiplicative recurrence.
inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        throw std::domain_error("exact::binomial: k > n");
    }
    if (k > n - k) {
        k = n - k;
    }
    BigInt r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

/// Natural log of a positive big integer: top bits as a double plus a
/// power-of-two correction.
inline double log_of(const BigInt& x) {
    if (x <= 0) {
        throw std::domain_error("exact::log_of: non-positive argument");
    }
    const long bits = static_cast<long>(boost::multiprecision::msb(x));
    if (bits <= 52) {
        return std::log(x.convert_to<double>());
    }
    const long shift = bits - 52;
    const BigInt top = x >> shift;
    return std::log(top.convert_to<double>()) +
           static_cast<double>(shift) * std::numbers::ln2;
}

/// Natural log of a positive rational.
inline double log_of(const BigRational& x) {
    return log_of(boost::multiprecision::numerator(x)) -
           log_of(boost::multiprecision::denominator(x));
}

} // namespace ramp::exact

#endif
