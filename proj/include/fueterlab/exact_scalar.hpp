#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>

#include "fueterlab/rational.hpp"

namespace fueterlab {

/// Exact real scalar: a finite rational combination of sqrt(d) * pi^(e/2)
/// with d a squarefree positive integer and e an integer. This ring has
/// decidable equality and contains every closed-form constant the engine
/// manipulates ((2*pi)^k, factorials, sqrt(2), sqrt(n!k!), ...).
class ExactScalar {
public:
    struct Key {
        long long rad;  // squarefree positive integer under the square root
        long pihalf;    // value carries pi^(pihalf/2)
        auto operator<=>(const Key&) const = default;
    };

    ExactScalar() = default;
    ExactScalar(long v) { add_term(Rational(v), 1, 0); }
    ExactScalar(const Rational& v) { add_term(v, 1, 0); }

    /// c * sqrt(rad) * pi^(pihalf/2); rad need not be squarefree, the
    /// square part is folded into the mantissa.
    static ExactScalar term(const Rational& c, const BigInt& rad, long pihalf);

    /// (2*pi)^j, j may be negative.
    static ExactScalar two_pi_pow(long j) {
        return term(rat_pow(Rational(2), j), 1, 2 * j);
    }
    static ExactScalar pi_pow(long j) { return term(1, 1, 2 * j); }

    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    bool is_rational() const;
    /// The rational value, valid only when is_rational().
    Rational rational_value() const;

    bool operator==(const ExactScalar&) const = default;

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse, defined only for single-term values.
    ExactScalar inverse() const;
    ExactScalar operator/(const ExactScalar& o) const { return *this * o.inverse(); }

    ExactScalar pow(long e) const;

    double to_double() const;

    const std::map<Key, Rational>& terms() const { return terms_; }

    std::string str() const;

private:
    void add_term(Rational c, const BigInt& rad, long pihalf);

    std::map<Key, Rational> terms_;
};

/// Exact square root of a single-term positive scalar whose radical part is
/// trivial (rad == 1) and whose pi exponent is even. Throws otherwise.
ExactScalar scalar_sqrt_term(const ExactScalar& s);

/// Splits n > 0 as s^2 * f with f squarefree; returns {s, f}.
std::pair<BigInt, BigInt> split_square_part(const BigInt& n);

}  // namespace fueterlab
