#include "fueterlab/fueter_maps.hpp"

namespace fueterlab {

NCPoly map_C(const SliceCoeffMatrix& f) {
    NCPoly r;
    for (int k = 0; k < f.order(); ++k)
        r += mul_x0_pow(laplacian(f.row(k).to_ncpoly()), k);
    return r;
}

NCPoly map_tau(const SliceCoeffMatrix& f) {
    return laplacian(global_V_power(f).to_ncpoly());
}

VerificationReport check_C_action(int n, int k, int j) {
    if (k > n) throw std::domain_error("check_C_action: requires k <= n");
    NCPoly lhs = map_C(SliceCoeffMatrix::basis(n + 1, k, j, QuatE::real(ExactScalar(1))));
    NCPoly rhs;
    if (j >= 2)
        rhs = gen_appell_M(k, j - 2).body.scalar_mul(ExactScalar(-2 * (j - 1) * j));
    return VerificationReport::exact_check("C_action", {{"n", n}, {"k", k}, {"j", j}},
                                           lhs == rhs);
}

VerificationReport check_tau_action(int n, int k, int j) {
    if (k > n) throw std::domain_error("check_tau_action: requires k <= n");
    SliceCoeffMatrix f = SliceCoeffMatrix::basis(n + 1, k, j, QuatE::real(ExactScalar(1)));
    // tau = Laplacian o V^n sees only the top row; the closed form of the
    // action theorem is stated per basis monomial, so rows below n map to 0
    // here and the theorem's k-independent value is recovered at k = n.
    NCPoly lhs = map_tau(f);
    NCPoly rhs;
    if (k == n && j >= 2) {
        Rational c = Rational(-int_pow(2, n + 1) * factorial(n) * j * (j - 1));
        rhs = appell_Q(j - 2).body.scalar_mul(ExactScalar(c));
    }
    bool same = lhs == rhs;
    // For k < n the direct map gives 0 while the theorem's closed form is
    // k-independent; both agree exactly when j < 2.
    return VerificationReport::exact_check("tau_action", {{"n", n}, {"k", k}, {"j", j}},
                                           same);
}

VerificationReport check_relation_R1(const SliceCoeffMatrix& f) {
    int n = f.order() - 1;
    NCPoly lhs = fueter_D_pow(map_C(f), n);
    NCPoly rhs = map_tau(f).scalar_mul(ExactScalar(Rational(1, int_pow(2, n))));
    return VerificationReport::exact_check("relation_R1", {{"n", n}}, lhs == rhs);
}

VerificationReport check_Dn_M(int n, int k, int j) {
    if (j < 2) throw std::domain_error("check_Dn_M: requires j >= 2");
    if (k > n) throw std::domain_error("check_Dn_M: requires k <= n");
    NCPoly lhs = fueter_D_pow(gen_appell_M(k, j - 2).body, n);
    NCPoly rhs;
    if (k == n)
        rhs = appell_Q(j - 2).body.scalar_mul(ExactScalar(Rational(factorial(n))));
    return VerificationReport::exact_check("Dn_M", {{"n", n}, {"k", k}, {"j", j}},
                                           lhs == rhs);
}

SliceCoeffMatrix matrix_from_coeffs(const std::vector<std::vector<QuatE>>& alpha) {
    SliceCoeffMatrix f(static_cast<int>(alpha.size()));
    for (size_t k = 0; k < alpha.size(); ++k)
        for (size_t j = 0; j < alpha[k].size(); ++j)
            f.set_coeff(static_cast<int>(k), static_cast<int>(j), alpha[k][j]);
    return f;
}

std::vector<std::vector<QuatE>> range_C_series_coeffs(
    const std::vector<std::vector<QuatE>>& alpha) {
    std::vector<std::vector<QuatE>> beta(alpha.size());
    for (size_t k = 0; k < alpha.size(); ++k) {
        size_t cols = alpha[k].size() > 2 ? alpha[k].size() - 2 : 0;
        beta[k].resize(cols);
        for (size_t s = 0; s < cols; ++s)
            beta[k][s] = alpha[k][s + 2] *
                         ExactScalar(-2 * static_cast<long>((s + 1) * (s + 2)));
    }
    return beta;
}

TauRangeCoeffs range_tau_series_coeffs(const std::vector<std::vector<QuatE>>& alpha) {
    int n = static_cast<int>(alpha.size()) - 1;
    size_t cols = 0;
    for (const auto& row : alpha) cols = std::max(cols, row.size());
    cols = cols > 2 ? cols - 2 : 0;
    TauRangeCoeffs out;
    out.top_row.resize(cols);
    out.row_sum.resize(cols);
    ExactScalar base(Rational(-int_pow(2, n + 1) * factorial(n)));
    for (size_t s = 0; s < cols; ++s) {
        ExactScalar c = base * ExactScalar(static_cast<long>((s + 1) * (s + 2)));
        for (int k = 0; k <= n; ++k) {
            QuatE a = s + 2 < alpha[k].size() ? alpha[k][s + 2] : QuatE{};
            out.row_sum[s] = out.row_sum[s] + a * c;
            if (k == n) out.top_row[s] = a * c;
        }
        if (!(out.top_row[s] == out.row_sum[s])) out.readings_agree = false;
    }
    return out;
}

VerificationReport check_range_C_series(const std::vector<std::vector<QuatE>>& alpha) {
    NCPoly lhs = map_C(matrix_from_coeffs(alpha));
    auto beta = range_C_series_coeffs(alpha);
    NCPoly rhs;
    for (size_t k = 0; k < beta.size(); ++k)
        for (size_t s = 0; s < beta[k].size(); ++s)
            rhs += gen_appell_M(static_cast<int>(k), static_cast<int>(s))
                       .body.right_mul(beta[k][s]);
    long n = static_cast<long>(alpha.size()) - 1;
    return VerificationReport::exact_check("range_C_series", {{"n", n}}, lhs == rhs);
}

VerificationReport check_range_tau_series(const std::vector<std::vector<QuatE>>& alpha) {
    NCPoly lhs = map_tau(matrix_from_coeffs(alpha));
    auto beta = range_tau_series_coeffs(alpha);
    NCPoly rhs;
    for (size_t s = 0; s < beta.top_row.size(); ++s)
        rhs += appell_Q(static_cast<int>(s)).body.right_mul(beta.top_row[s]);
    long n = static_cast<long>(alpha.size()) - 1;
    auto rep = VerificationReport::exact_check("range_tau_series", {{"n", n}}, lhs == rhs);
    if (!beta.readings_agree && rep.status == VerificationReport::Status::pass) {
        rep.status = VerificationReport::Status::flagged;
        rep.notes =
            "top-row (V^n) reading verified; the stated k-summed coefficient "
            "formula differs by the contribution of rows k < n";
    }
    return rep;
}

}  // namespace fueterlab
