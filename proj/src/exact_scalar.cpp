#include "fueterlab/exact_scalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace fueterlab {

std::pair<BigInt, BigInt> split_square_part(const BigInt& n) {
    if (n <= 0) throw std::domain_error("split_square_part: n must be positive");
    BigInt s = 1, f = 1, m = n;
    // The radicands arising here are smooth (factorials, powers of two),
    // so trial division by small candidates always terminates with m == 1.
    for (BigInt d = 2; d <= 1000 && d * d <= m; ++d) {
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= d;
        if (e % 2) f *= d;
    }
    if (m > 1) {
        BigInt r = sqrt(m);
        if (r * r == m)
            s *= r;
        else
            f *= m;  // residual treated as squarefree
    }
    return {s, f};
}

void ExactScalar::add_term(Rational c, const BigInt& rad, long pihalf) {
    if (c == 0) return;
    auto [sq, free] = split_square_part(rad);
    c *= Rational(sq);
    Key key{static_cast<long long>(free), pihalf};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactScalar ExactScalar::term(const Rational& c, const BigInt& rad, long pihalf) {
    ExactScalar s;
    s.add_term(c, rad, pihalf);
    return s;
}

bool ExactScalar::is_rational() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.rad == 1 &&
           terms_.begin()->first.pihalf == 0;
}

Rational ExactScalar::rational_value() const {
    if (terms_.empty()) return 0;
    if (!is_rational()) throw std::domain_error("ExactScalar: not rational");
    return terms_.begin()->second;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    ExactScalar r = *this;
    for (const auto& [k, c] : o.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    ExactScalar r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            // sqrt(a)*sqrt(b) = g*sqrt((a/g)(b/g)) with g = gcd(a,b);
            // for squarefree a, b the product (a/g)(b/g) is squarefree.
            long long g = std::gcd(ka.rad, kb.rad);
            long long rad = (ka.rad / g) * (kb.rad / g);
            r.add_term(ca * cb * g, rad, ka.pihalf + kb.pihalf);
        }
    }
    return r;
}

ExactScalar ExactScalar::inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("ExactScalar::inverse: not a single term");
    const auto& [k, c] = *terms_.begin();
    // 1/(c*sqrt(r)*pi^(p/2)) = (1/(c*r)) * sqrt(r) * pi^(-p/2)
    return term(Rational(1) / (c * k.rad), k.rad, -k.pihalf);
}

ExactScalar ExactScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ExactScalar r(1);
    for (long i = 0; i < e; ++i) r *= *this;
    return r;
}

double ExactScalar::to_double() const {
    double v = 0.0;
    for (const auto& [k, c] : terms_) {
        double t = static_cast<double>(c) * std::sqrt(static_cast<double>(k.rad));
        v += t * std::pow(M_PI, 0.5 * k.pihalf);
    }
    return v;
}

std::string ExactScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (k.rad != 1) os << "*sqrt(" << k.rad << ")";
        if (k.pihalf != 0) os << "*pi^(" << k.pihalf << "/2)";
    }
    return os.str();
}

ExactScalar scalar_sqrt_term(const ExactScalar& s) {
    if (s.terms().size() != 1)
        throw std::domain_error("scalar_sqrt_term: not a single term");
    const auto& [k, c] = *s.terms().begin();
    if (k.rad != 1 || k.pihalf % 2 != 0 || c <= 0)
        throw std::domain_error("scalar_sqrt_term: value has no representable square root");
    // sqrt(a/b) = sqrt(a*b)/b
    BigInt ab = numerator(c) * denominator(c);
    auto [sq, free] = split_square_part(ab);
    return ExactScalar::term(Rational(sq, denominator(c)), free, k.pihalf / 2);
}

}  // namespace fueterlab
