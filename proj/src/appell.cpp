#include "fueterlab/appell.hpp"

namespace fueterlab {

Rational T_coeff(int k, int j) {
    if (j < 0 || j > k) throw std::out_of_range("T_coeff: j out of range");
    return Rational(2 * (k - j + 1), (k + 1) * (k + 2));
}

AppellPoly appell_Q(int k) {
    AppellPoly p;
    p.k = k;
    if (k < 0) return p;
    p.matrix = SliceCoeffMatrix(k + 1);
    for (int j = 0; j <= k; ++j) {
        QuatE c = QuatE::real(ExactScalar(T_coeff(k, j)));
        p.matrix.set_coeff(j, k - j, c);
        p.body += expand_qbar_q(j, k - j).right_mul(c);
    }
    return p;
}

GenAppellPoly gen_appell_M(int k, int s) {
    GenAppellPoly m;
    m.k = k;
    m.s = s;
    if (s >= 0) m.body = mul_x0_pow(appell_Q(s).body, k);
    return m;
}

VerificationReport check_appell_property(int k) {
    if (k < 1) throw std::domain_error("check_appell_property: k must be >= 1");
    NCPoly lhs = fueter_Dbar(appell_Q(k).body).scalar_mul(ExactScalar(Rational(1, 2)));
    NCPoly rhs = appell_Q(k - 1).body.scalar_mul(ExactScalar(k));
    return VerificationReport::exact_check("appell_property", {{"k", k}}, lhs == rhs);
}

VerificationReport check_Dbar_power(int j, int s) {
    if (s < j) throw std::domain_error("check_Dbar_power: requires s >= j");
    NCPoly lhs = fueter_Dbar_pow(appell_Q(s).body, j);
    ExactScalar c(Rational(int_pow(2, j) * factorial(s) / factorial(s - j)));
    NCPoly rhs = appell_Q(s - j).body.scalar_mul(c);
    return VerificationReport::exact_check("Dbar_power", {{"j", j}, {"s", s}},
                                           lhs == rhs);
}

VerificationReport check_poly_appell(int k, int s) {
    if (s <= k) throw std::domain_error("check_poly_appell: requires s >= k+1");
    NCPoly lhs = fueter_Dbar_pow(gen_appell_M(k, s).body, k + 1);
    NCPoly rhs;
    for (int j = 1; j <= k + 1; ++j) {
        Rational c = Rational(int_pow(2, j) * binomial(k + 1, j) * factorial(k) *
                              factorial(s)) /
                     Rational(factorial(j - 1) * factorial(s - j));
        rhs += gen_appell_M(j - 1, s - j).body.scalar_mul(ExactScalar(c));
    }
    return VerificationReport::exact_check("poly_appell", {{"k", k}, {"s", s}},
                                           lhs == rhs);
}

}  // namespace fueterlab
