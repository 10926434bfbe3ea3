#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fueterlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline BigInt int_pow(BigInt base, long e) {
    BigInt r = 1;
    while (e-- > 0) r *= base;
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e < 0) return Rational(1) / rat_pow(base, -e);
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace fueterlab
