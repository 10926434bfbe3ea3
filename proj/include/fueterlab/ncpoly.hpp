#pragma once

#include <array>
#include <map>

#include "fueterlab/quaternion.hpp"

namespace fueterlab {

/// Exponents of x0..x3. Monomials commute with quaternion coefficients
/// because the variables are real-valued.
struct Monomial4 {
    std::array<int, 4> e{0, 0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2] + e[3]; }

    bool operator==(const Monomial4&) const = default;

    // graded lexicographic; fixes the canonical serialization order
    bool operator<(const Monomial4& o) const {
        if (degree() != o.degree()) return degree() < o.degree();
        return e < o.e;
    }

    Monomial4 operator+(const Monomial4& o) const {
        return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]}};
    }
};

/// Polynomial in the real variables x0..x3 with quaternion coefficients.
/// Coefficients sit to the right of the monomials (right vector space
/// convention); products multiply coefficients in operand order.
class NCPoly {
public:
    NCPoly() = default;

    static NCPoly constant(const QuatE& c) { return monomial({}, c); }
    static NCPoly monomial(const Monomial4& m, const QuatE& c);
    /// x0^a x1^b x2^c x3^d
    static NCPoly variable(int axis);

    bool is_zero() const { return terms_.empty(); }
    /// degree of the zero polynomial is -1
    int degree() const;

    bool operator==(const NCPoly&) const = default;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }

    /// c * f: multiplies every coefficient by c on the left.
    NCPoly left_mul(const QuatE& c) const;
    /// f * c: multiplies every coefficient by c on the right.
    NCPoly right_mul(const QuatE& c) const;
    NCPoly scalar_mul(const ExactScalar& s) const;

    const std::map<Monomial4, QuatE>& terms() const { return terms_; }

private:
    void add_term(const Monomial4& m, const QuatE& c);

    std::map<Monomial4, QuatE> terms_;
};

/// Formal partial derivative with respect to x_axis.
NCPoly partial(const NCPoly& f, int axis);

/// Cauchy-Fueter operator: dx0 f + i dx1 f + j dx2 f + k dx3 f
/// (units multiply coefficients on the left).
NCPoly fueter_D(const NCPoly& f);

/// Conjugate operator: dx0 f - i dx1 f - j dx2 f - k dx3 f.
NCPoly fueter_Dbar(const NCPoly& f);

NCPoly fueter_D_pow(const NCPoly& f, int n);
NCPoly fueter_Dbar_pow(const NCPoly& f, int n);

/// Four-dimensional Laplacian.
NCPoly laplacian(const NCPoly& f);

/// Substitutes the components of q; coefficients projected to floats.
QuatD evaluate(const NCPoly& f, const QuatD& q);

/// The expanded polynomial qbar^k q^j, with q = x0 + i x1 + j x2 + k x3.
/// q and qbar commute (qbar = 2 x0 - q), so the factor order is immaterial.
NCPoly expand_qbar_q(int k, int j);

/// x0^k * f (real monomial, commutes with the coefficients).
NCPoly mul_x0_pow(const NCPoly& f, int k);

}  // namespace fueterlab
