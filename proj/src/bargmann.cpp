#include "fueterlab/bargmann.hpp"

#include <cmath>
#include <set>

#include "fueterlab/quadrature.hpp"

namespace fueterlab {

static ExactScalar sqrt_two_pi_fact(int n, int k) {
    // sqrt((2pi)^{n+k} n! k!), always a representable single term
    return scalar_sqrt_term(ExactScalar(Rational(factorial(n) * factorial(k))) *
                            ExactScalar::two_pi_pow(n + k));
}

BasisAction bargmann_basis_action(int n, int k) {
    BasisAction a;
    a.n = n;
    a.k = k;
    a.normalizer = scalar_sqrt_term(
        ExactScalar(Rational(2, factorial(n) * factorial(k))) *
        ExactScalar::two_pi_pow(-(n + k)));
    a.image = qhermite(n, k).body;
    return a;
}

SliceCoeffMatrix bargmann_action_matrix(int n, int k) {
    BasisAction a = bargmann_basis_action(n, k);
    return qhermite(n, k).matrix.right_mul(QuatE::real(a.normalizer));
}

BasisAction bargmann_C_basis(int n, int k) {
    BasisAction a;
    a.n = n;
    a.k = k;
    if (k < n + 2) return a;
    a.normalizer = ExactScalar::term(-2, 2, 0) * sqrt_two_pi_fact(n, k);
    for (int j = 0; j <= n; ++j) {
        ExactScalar c = ExactScalar(Rational((j % 2 ? -1 : 1),
                                             factorial(j) * factorial(n - j) *
                                                 factorial(k - j - 2))) *
                        ExactScalar::two_pi_pow(-j);
        a.image += gen_appell_M(n - j, k - j - 2).body.scalar_mul(c);
    }
    return a;
}

BasisAction bargmann_tau_basis(int n, int k) {
    BasisAction a;
    a.n = n;
    a.k = k;
    if (k < n + 2) return a;
    a.normalizer = ExactScalar::term(-int_pow(2, n + 1), 2, 0) * sqrt_two_pi_fact(n, k);
    a.image = appell_Q(k - 2).body.scalar_mul(
        ExactScalar(Rational(1, factorial(k - 2))));
    return a;
}

// The published closed forms declare the image zero for all k < n+2, but the
// termwise action only annihilates k < 2: for 2 <= k < n+2 the composed map
// produces a nonzero polynomial. Those head indices are reported as flagged
// (with the computed image acknowledged), never as engine failures.
static VerificationReport head_range_report(const char* name, int n, int k,
                                            bool map_is_zero) {
    if (map_is_zero)
        return VerificationReport::exact_check(name, {{"n", n}, {"k", k}}, true);
    VerificationReport r =
        VerificationReport::exact_check(name, {{"n", n}, {"k", k}}, true,
                                        "published zero branch for k < n+2 "
                                        "disagrees with the termwise action, "
                                        "which gives a nonzero image");
    r.status = VerificationReport::Status::flagged;
    return r;
}

VerificationReport check_C_composition(int n, int k) {
    NCPoly lhs = map_C(bargmann_action_matrix(n, k));
    if (k < n + 2) return head_range_report("C_composition", n, k, lhs.is_zero());
    NCPoly rhs = bargmann_C_basis(n, k).scaled();
    return VerificationReport::exact_check("C_composition", {{"n", n}, {"k", k}},
                                           lhs == rhs);
}

VerificationReport check_tau_composition(int n, int k) {
    NCPoly via_tau = map_tau(bargmann_action_matrix(n, k));
    if (k < n + 2)
        return head_range_report("tau_composition", n, k, via_tau.is_zero());
    NCPoly rhs = bargmann_tau_basis(n, k).scaled();
    NCPoly via_D = fueter_D_pow(bargmann_C_basis(n, k).scaled(), n)
                       .scalar_mul(ExactScalar(Rational(int_pow(2, n))));
    return VerificationReport::exact_check("tau_composition", {{"n", n}, {"k", k}},
                                           via_D == rhs && via_tau == rhs);
}

// ---- float evaluation ----

QuatD eval_appell_Q(int s, const QuatD& q) {
    if (s < 0) return {};
    QuatD qc = q.conj();
    // powers q^{s-j} qbar^j; q and qbar commute
    std::vector<QuatD> qp(s + 1), cp(s + 1);
    qp[0] = cp[0] = QuatD::real(1.0);
    for (int i = 1; i <= s; ++i) {
        qp[i] = qp[i - 1] * q;
        cp[i] = cp[i - 1] * qc;
    }
    QuatD acc;
    for (int j = 0; j <= s; ++j) {
        double t = 2.0 * (s - j + 1) / (static_cast<double>(s + 1) * (s + 2));
        acc = acc + qp[s - j] * cp[j] * t;
    }
    return acc;
}

QuatD eval_gen_M(int k, int s, const QuatD& q) {
    return eval_appell_Q(s, q) * std::pow(q.w, k);
}

QuatD eval_qhermite(int m, int p, const QuatD& q) {
    QuatD qc = q.conj();
    QuatD acc;
    for (int s = 0; s <= std::min(m, p); ++s) {
        double c = (s % 2 ? -1.0 : 1.0) *
                   static_cast<double>(Rational(factorial(m) * factorial(p),
                                                factorial(s) * factorial(m - s) *
                                                    factorial(p - s))) *
                   std::pow(2.0 * M_PI, p + m - s);
        QuatD mono = QuatD::real(1.0);
        for (int i = 0; i < m - s; ++i) mono = mono * qc;
        for (int i = 0; i < p - s; ++i) mono = mono * q;
        acc = acc + mono * c;
    }
    return acc;
}

double eval_psi(int k, double x) {
    // ||h_k||^2 = 2^k (2pi)^k k! / sqrt(2)
    double log_nsq = k * std::log(4.0 * M_PI) + std::lgamma(k + 1.0) -
                     0.5 * std::log(2.0);
    return hermite_h_eval(k, 2.0 * M_PI, x) * std::exp(-0.5 * log_nsq);
}

KernelPair kernel_K(int n, const QuatD& q, double x, int J) {
    if (J < 1) throw std::domain_error("kernel_K: J must be >= 1");
    KernelPair out;
    for (int k = 0; k <= J; ++k) {
        // ||H_{n,k}||^2 = n! k! (2pi)^{n+k} / 2
        double log_nsq = std::lgamma(n + 1.0) + std::lgamma(k + 1.0) +
                         (n + k) * std::log(2.0 * M_PI) - std::log(2.0);
        out.series = out.series +
                     eval_qhermite(n, k, q) * (eval_psi(k, x) * std::exp(-0.5 * log_nsq));
    }
    double c = std::pow(2.0, 0.75) /
               std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) *
                         std::pow(2.0 * M_PI, n));
    QuatD arg = (q * q + QuatD::real(x * x)) * (-M_PI) +
                q * (2.0 * M_PI * std::sqrt(2.0) * x);
    double y = 2.0 * q.w / std::sqrt(2.0) - x;
    out.closed = quat_exp(arg) * (c * hermite_H2pi_eval(n, y));
    if (!std::isfinite(quat_abs(out.series)) || !std::isfinite(quat_abs(out.closed)))
        throw std::domain_error("kernel_K: non-finite result");
    return out;
}

QuatD kernel_Phi(int n, const QuatD& q, double x, int J) {
    if (J < 1) throw std::domain_error("kernel_Phi: J must be >= 1");
    double pref = -std::sqrt(std::tgamma(n + 1.0)) * std::pow(2.0 * M_PI, 0.5 * n) *
                  std::pow(2.0, 0.75);
    QuatD acc;
    for (int l = 0; l <= J; ++l) {
        double h = hermite_h_eval(l + n + 2, 2.0 * M_PI, x);
        for (int j = 0; j <= n; ++j) {
            double log_den = 0.5 * (l + n) * std::log(2.0) + j * std::log(2.0 * M_PI) +
                             std::lgamma(j + 1.0) + std::lgamma(l + n - j + 1.0) +
                             std::lgamma(n - j + 1.0);
            double c = (j % 2 ? -1.0 : 1.0) * h * std::exp(-log_den);
            acc = acc + eval_gen_M(n - j, l + n - j, q) * c;
        }
    }
    return acc * pref;
}

QuatD kernel_Theta(int n, const QuatD& q, double x, int J) {
    if (J < 1) throw std::domain_error("kernel_Theta: J must be >= 1");
    double pref = -std::sqrt(std::tgamma(n + 1.0)) * std::pow(M_PI, 0.5 * n) *
                  std::pow(2.0, 0.75);
    QuatD acc;
    for (int k = 0; k <= J; ++k) {
        double log_den = 0.5 * k * std::log(2.0) + std::lgamma(k + n + 1.0);
        double c = hermite_h_eval(k + n + 2, 2.0 * M_PI, x) * std::exp(-log_den);
        acc = acc + eval_appell_Q(k + n, q) * c;
    }
    return acc * pref;
}

static QuatD quadrature_pass(KernelTag tag, int n,
                             const std::function<double(double)>& phi,
                             const QuatD& q, int m, int J) {
    QuadratureRule rule = gauss_hermite(m);
    double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
    QuatD acc;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        double t = rule.nodes[i], w = rule.weights[i];
        if (!(w > 0.0)) continue;  // underflowed tail node
        double x = t * inv_sqrt_pi;
        // absorb the e^{-t^2} of the Hermite weight back into the integrand
        double wx = std::exp(std::log(w) + t * t) * inv_sqrt_pi;
        QuatD kv;
        switch (tag) {
            case KernelTag::K: kv = kernel_K(n, q, x, J).closed; break;
            case KernelTag::Phi: kv = kernel_Phi(n, q, x, J); break;
            case KernelTag::Theta: kv = kernel_Theta(n, q, x, J); break;
        }
        acc = acc + kv * (wx * phi(x));
    }
    return acc;
}

QuatD transform_quadrature(KernelTag tag, int n,
                           const std::function<double(double)>& phi,
                           const QuatD& q, int nodes, int J) {
    if (nodes < 16) throw std::domain_error("transform_quadrature: nodes < 16");
    QuatD prev = quadrature_pass(tag, n, phi, q, nodes, J);
    for (int m = 2 * nodes; m <= 1024; m *= 2) {
        QuatD cur = quadrature_pass(tag, n, phi, q, m, J);
        if (quat_abs(cur - prev) < 1e-9) return cur;
        prev = cur;
    }
    return prev;
}

// ---- coefficient-level isometries ----

ASpaceElement bargmann_C_image(int n, const std::vector<QuatE>& a) {
    ASpaceElement e;
    e.n = n;
    int hmax = static_cast<int>(a.size()) - n - 3;
    if (hmax < -1) hmax = -1;
    e.beta.assign(hmax + 1, std::vector<QuatE>(n + 1));
    for (int k = n + 2; k < static_cast<int>(a.size()); ++k) {
        if (a[k].is_zero()) continue;
        ExactScalar norm = ExactScalar::term(-2, 2, 0) * sqrt_two_pi_fact(n, k);
        for (int j = 0; j <= n; ++j) {
            ExactScalar c = ExactScalar(Rational((j % 2 ? -1 : 1),
                                                 factorial(j) * factorial(n - j) *
                                                     factorial(k - j - 2))) *
                            ExactScalar::two_pi_pow(-j);
            e.beta[k - n - 2][j] = a[k] * (norm * c);
        }
    }
    return e;
}

ATildeElement bargmann_tau_image(int n, const std::vector<QuatE>& a) {
    ATildeElement e;
    e.n = n;
    int hmax = static_cast<int>(a.size()) - n - 3;
    if (hmax < -1) hmax = -1;
    e.beta.assign(hmax + 1, QuatE{});
    for (int k = n + 2; k < static_cast<int>(a.size()); ++k) {
        if (a[k].is_zero()) continue;
        ExactScalar w = ExactScalar::term(-int_pow(2, n + 1), 2, 0) *
                        sqrt_two_pi_fact(n, k) *
                        ExactScalar(Rational(1, factorial(k - 2)));
        e.beta[k - n - 2] = a[k] * w;
    }
    return e;
}

static ExactScalar coeff_norm_sum(const std::vector<QuatE>& a, int from) {
    ExactScalar s;
    for (size_t k = from; k < a.size(); ++k) s += a[k].norm_sq();
    return s;
}

VerificationReport isometry_C_check(int n, const std::vector<QuatE>& a) {
    ASpaceElement e = bargmann_C_image(n, a);
    QuatE lhs = inner_A(e, e);
    ExactScalar c = ExactScalar(Rational(8 * factorial(n + 1))) *
                    ExactScalar::two_pi_pow(n);
    QuatE rhs = QuatE::real(c * coeff_norm_sum(a, n + 2));
    return VerificationReport::exact_check(
        "isometry_C", {{"n", n}, {"len", static_cast<long>(a.size())}}, lhs == rhs);
}

VerificationReport isometry_tau_check(int n, const std::vector<QuatE>& a) {
    ATildeElement e = bargmann_tau_image(n, a);
    QuatE lhs = inner_Atilde(e, e);
    ExactScalar tail = coeff_norm_sum(a, n + 2);
    ExactScalar derived = ExactScalar(Rational(2 * int_pow(4, n + 1) * factorial(n))) *
                          ExactScalar::two_pi_pow(2 * (n + 1));
    ExactScalar published = ExactScalar(Rational(2 * int_pow(4, n + 2) * factorial(n))) *
                            ExactScalar::two_pi_pow(2 * (n + 1));
    bool pass_derived = lhs == QuatE::real(derived * tail);
    bool pass_published = lhs == QuatE::real(published * tail);
    auto rep = VerificationReport::exact_check(
        "isometry_tau", {{"n", n}, {"len", static_cast<long>(a.size())}},
        pass_derived);
    if (pass_derived && !pass_published) {
        rep.status = VerificationReport::Status::flagged;
        rep.notes =
            "norm ratio matches the derived constant 2*4^{n+1}(2pi)^{2(n+1)}n!; "
            "the published 4^{n+2}*2(2pi)^{2(n+1)}n! is larger by a factor 4";
    }
    return rep;
}

// ---- direct-sum transforms ----

BasisAction full_transform_basis(int N, BlockTransform t, int n, int k) {
    if (n > N) throw std::domain_error("full_transform_basis: block beyond N");
    switch (t) {
        case BlockTransform::B: return bargmann_basis_action(n, k);
        case BlockTransform::BC: return bargmann_C_basis(n, k);
        default: return bargmann_tau_basis(n, k);
    }
}

VerificationReport check_full_C_isometry(const std::vector<std::vector<QuatE>>& a) {
    long N = static_cast<long>(a.size()) - 1;
    std::vector<ASpaceElement> f;
    ExactScalar total;
    for (size_t n = 0; n < a.size(); ++n) {
        f.push_back(bargmann_C_image(static_cast<int>(n), a[n]));
        total += coeff_norm_sum(a[n], static_cast<int>(n) + 2);
    }
    QuatE lhs = inner_frakA(f, f);
    QuatE rhs = QuatE::real(ExactScalar(8) * total);
    return VerificationReport::exact_check("full_C_isometry", {{"N", N}}, lhs == rhs);
}

VerificationReport check_full_tau_isometry(const std::vector<std::vector<QuatE>>& a) {
    long N = static_cast<long>(a.size()) - 1;
    std::vector<ATildeElement> f;
    ExactScalar total;
    for (size_t n = 0; n < a.size(); ++n) {
        f.push_back(bargmann_tau_image(static_cast<int>(n), a[n]));
        total += coeff_norm_sum(a[n], static_cast<int>(n) + 2);
    }
    QuatE lhs = inner_frakAtilde(f, f);
    ExactScalar derived = ExactScalar(8) * ExactScalar::two_pi_pow(2);
    bool pass = lhs == QuatE::real(derived * total);
    auto rep = VerificationReport::exact_check("full_tau_isometry", {{"N", N}}, pass);
    if (pass && !total.is_zero()) {
        rep.status = VerificationReport::Status::flagged;
        rep.notes =
            "blockwise tau transform (each block at its own order; the "
            "top-order V-power would annihilate lower blocks) gives the "
            "constant 8(2pi)^2; the published value is 32(2pi)^2";
    }
    return rep;
}

// ---- n = 1 reproducing kernel ----

QRKernelSeries K2_kernel(int J) {
    if (J < 2) throw std::domain_error("K2_kernel: J must be >= 2");
    QRKernelSeries s;
    ExactScalar four_pi = ExactScalar(2) * ExactScalar::two_pi_pow(1);
    for (int l = 0; l <= J; ++l) {
        ExactScalar el = ExactScalar(Rational(1, factorial(l))) *
                         ExactScalar::two_pi_pow(l);  // e_* term (2pi)^l/l!
        s.terms[{0, l, 0, l}] += ExactScalar(2) * el;          // 2 e_*
        s.terms[{0, l, 1, l + 1}] += -four_pi * el;            // -4pi e_* |r|^2
        s.terms[{0, l + 1, 0, l + 1}] += four_pi * el;         // 4pi q e_* rbar
        s.terms[{1, l, 1, l}] += four_pi * el;                 // qbar 4pi e_* r
        s.terms[{1, l + 1, 0, l}] += -four_pi * el;            // -qbar 4pi q e_*
    }
    return s;
}

static std::map<std::pair<int, int>, SliceCoeffMatrix> group_by_r(
    const QRKernelSeries& s) {
    std::map<std::pair<int, int>, SliceCoeffMatrix> g;
    for (const auto& [key, c] : s.terms) {
        if (c.is_zero()) continue;
        auto [kb, jq, ar, br] = key;
        auto it = g.try_emplace({ar, br}, SliceCoeffMatrix(2)).first;
        it->second.set_coeff(kb, jq, it->second.coeff(kb, jq) + QuatE::real(c));
    }
    return g;
}

std::map<std::pair<int, int>, NCPoly> apply_C2_over_r(const QRKernelSeries& s) {
    std::map<std::pair<int, int>, NCPoly> out;
    for (const auto& [rkey, mat] : group_by_r(s)) {
        NCPoly p = map_C(mat);
        if (!p.is_zero()) out.emplace(rkey, std::move(p));
    }
    return out;
}

std::map<std::pair<int, int>, NCPoly> apply_tau2_over_r(const QRKernelSeries& s) {
    std::map<std::pair<int, int>, NCPoly> out;
    for (const auto& [rkey, mat] : group_by_r(s)) {
        NCPoly p = map_tau(mat);
        if (!p.is_zero()) out.emplace(rkey, std::move(p));
    }
    return out;
}

// adds body * c * conj(H_{1,p})(r, rbar) into the per-r-monomial map
static void add_conj_qhermite_terms(std::map<std::pair<int, int>, NCPoly>& dst,
                                    const NCPoly& body, const ExactScalar& c, int p) {
    SliceCoeffMatrix h = qhermite(1, p).matrix;
    for (int kc = 0; kc < h.order(); ++kc)
        for (int jc = 0; jc <= h.row(kc).trunc_degree(); ++jc) {
            QuatE hc = h.coeff(kc, jc);
            if (hc.is_zero()) continue;
            // conj(rbar^kc r^jc * real) swaps the exponents
            dst[{kc, jc}] += body.scalar_mul(c * hc.w);
        }
}

static bool compare_r_maps(const std::map<std::pair<int, int>, NCPoly>& lhs,
                           const std::map<std::pair<int, int>, NCPoly>& rhs,
                           int deg) {
    auto get = [](const std::map<std::pair<int, int>, NCPoly>& m,
                  std::pair<int, int> k) {
        auto it = m.find(k);
        return it == m.end() ? NCPoly{} : it->second;
    };
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : lhs) keys.insert(k);
    for (const auto& [k, v] : rhs) keys.insert(k);
    for (const auto& k : keys) {
        if (k.second > deg) continue;  // beyond the jointly representable range
        if (!(get(lhs, k) == get(rhs, k))) return false;
    }
    return true;
}

VerificationReport check_C2_of_K2(int deg, int J) {
    if (J < deg + 2)
        throw std::domain_error("check_C2_of_K2: truncation too small for degree");
    auto lhs = apply_C2_over_r(K2_kernel(J));
    // The identity holds with prefactor -4, not the published -8: only -4 is
    // compatible with the exact tau_2 image below and the intertwining
    // relation D(C_2 f) = tau_2(f)/2, both verified elsewhere. The check
    // compares against -4 exactly and reports the factor-2 gap as flagged.
    std::map<std::pair<int, int>, NCPoly> rhs;
    for (int h = 0; h <= deg + 3; ++h) {
        ExactScalar inv_h_fact(Rational(1, factorial(h)));
        add_conj_qhermite_terms(rhs, gen_appell_M(1, h).body,
                                ExactScalar(-4) * inv_h_fact, h + 2);
        add_conj_qhermite_terms(rhs, gen_appell_M(0, h).body,
                                ExactScalar(4) * inv_h_fact *
                                    ExactScalar::two_pi_pow(-1),
                                h + 3);
    }
    VerificationReport r = VerificationReport::exact_check(
        "C2_of_K2", {{"deg", deg}, {"J", J}}, compare_r_maps(lhs, rhs, deg),
        "identity verified with prefactor -4; the published prefactor -8 is "
        "twice the computed one and contradicts the tau_2 identity through "
        "D(C_2 f) = tau_2(f)/2");
    if (r.status == VerificationReport::Status::pass)
        r.status = VerificationReport::Status::flagged;
    return r;
}

VerificationReport check_tau2_of_K2(int deg, int J) {
    if (J < deg + 2)
        throw std::domain_error("check_tau2_of_K2: truncation too small for degree");
    auto lhs = apply_tau2_over_r(K2_kernel(J));
    std::map<std::pair<int, int>, NCPoly> rhs;
    for (int k = 0; k <= deg + 2; ++k)
        add_conj_qhermite_terms(rhs, appell_Q(k).body,
                                ExactScalar(Rational(-8, factorial(k))), k + 2);
    return VerificationReport::exact_check("tau2_of_K2", {{"deg", deg}, {"J", J}},
                                           compare_r_maps(lhs, rhs, deg));
}

}  // namespace fueterlab
