#include "fueterlab/hermite.hpp"

#include <algorithm>
#include <cmath>

#include "fueterlab/quadrature.hpp"

namespace fueterlab {

static void poly1_trim(Poly1& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly1 poly1_derivative(const Poly1& p) {
    Poly1 d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * ExactScalar(static_cast<long>(i)));
    poly1_trim(d);
    return d;
}

Poly1 poly1_sub(const Poly1& a, const Poly1& b) {
    Poly1 r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    poly1_trim(r);
    return r;
}

bool poly1_equal(const Poly1& a, const Poly1& b) {
    return poly1_sub(a, b).empty();
}

double poly1_eval(const Poly1& p, double x) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i].to_double();
    return v;
}

GaussianPoly1D hermite_h(int k, const ExactScalar& nu) {
    if (!nu.is_single_term() || nu.to_double() <= 0.0)
        throw std::domain_error("hermite_h: rate must be a single positive term");
    GaussianPoly1D h;
    h.gauss_rate = nu;
    h.poly = {ExactScalar(1)};
    ExactScalar two_nu = nu * ExactScalar(2);
    for (int i = 0; i < k; ++i) {
        // P_{i+1} = 2 nu x P_i - P_i'
        Poly1 next(h.poly.size() + 1);
        for (size_t j = 0; j < h.poly.size(); ++j) next[j + 1] = h.poly[j] * two_nu;
        h.poly = poly1_sub(next, poly1_derivative(h.poly));
    }
    return h;
}

double hermite_h_eval(int k, double nu, double x) {
    // Rodrigues recursion restated on values: P_{i+1} = 2 nu x P_i - 2 nu i P_{i-1}
    double prev = 0.0, cur = 1.0;
    for (int i = 0; i < k; ++i) {
        double next = 2.0 * nu * x * cur - 2.0 * nu * i * prev;
        prev = cur;
        cur = next;
    }
    return cur * std::exp(-0.5 * nu * x * x);
}

ExactScalar hermite_norm_sq(int k, const ExactScalar& nu) {
    if (!nu.is_single_term() || nu.to_double() <= 0.0)
        throw std::domain_error("hermite_norm_sq: rate must be a single positive term");
    ExactScalar c(Rational(int_pow(2, k) * factorial(k)));
    return c * nu.pow(k) * scalar_sqrt_term(ExactScalar::pi_pow(1) / nu);
}

Poly1 hermite_H2pi(int n) {
    Poly1 p(n + 1);
    for (int j = 0; 2 * j <= n; ++j) {
        Rational c = Rational((j % 2 ? -1 : 1) * factorial(n) *
                              int_pow(2, 2 * n - 3 * j)) /
                     Rational(factorial(j) * factorial(n - 2 * j));
        p[n - 2 * j] = ExactScalar::term(c, 1, 2 * (n - j));
    }
    poly1_trim(p);
    return p;
}

double hermite_H2pi_eval(int n, double y) {
    double prev = 0.0, cur = 1.0, c = 4.0 * M_PI;
    for (int i = 0; i < n; ++i) {
        double next = c * y * cur - c * i * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

QHermitePoly qhermite(int m, int p) {
    QHermitePoly h;
    h.m = m;
    h.p = p;
    h.matrix = SliceCoeffMatrix(m + 1);
    for (int s = 0; s <= std::min(m, p); ++s) {
        Rational c = Rational((s % 2 ? -1 : 1) * factorial(m) * factorial(p)) /
                     Rational(factorial(s) * factorial(m - s) * factorial(p - s));
        ExactScalar a = ExactScalar(c) * ExactScalar::two_pi_pow(p + m - s);
        h.matrix.set_coeff(m - s, p - s, QuatE::real(a));
    }
    h.body = to_ncpoly(h.matrix);
    return h;
}

SliceCoeffMatrix qhermite_rodrigues_slice(int m, int p) {
    // work on the slice: rows index the zbar exponent, columns the z one;
    // the Gaussian e^{-2 pi z zbar} stays implicit, so
    // d_z (P e^{-2 pi z zbar}) = (d_z P - 2 pi zbar P) e^{-2 pi z zbar}.
    std::map<std::pair<int, int>, ExactScalar> poly{{{0, p}, ExactScalar(1)}};
    ExactScalar m2pi = -ExactScalar::two_pi_pow(1);
    for (int step = 0; step < m; ++step) {
        std::map<std::pair<int, int>, ExactScalar> next;
        for (const auto& [e, c] : poly) {
            auto [kb, jz] = e;
            if (jz > 0) next[{kb, jz - 1}] += c * ExactScalar(jz);
            next[{kb + 1, jz}] += c * m2pi;
        }
        poly = std::move(next);
    }
    ExactScalar pref = ExactScalar::two_pi_pow(p) * ExactScalar(m % 2 ? -1 : 1);
    SliceCoeffMatrix out(m + 1);
    for (const auto& [e, c] : poly)
        if (!c.is_zero()) out.set_coeff(e.first, e.second, QuatE::real(pref * c));
    return out;
}

ExactScalar gaussian_moment(int a, int b) {
    if (a != b) return {};
    return ExactScalar(Rational(factorial(a), 2)) * ExactScalar::two_pi_pow(-a);
}

std::pair<double, double> gaussian_moment_numeric(int a, int b) {
    // polar form: int_0^inf r^{a+b+1} e^{-2 pi r^2} dr * int_0^{2pi} e^{i(a-b)t} dt.
    // The integrand is negligible past r = 6; the trapezoid rule on the
    // circle is exact for trigonometric polynomials below the node count.
    QuadratureRule radial = gauss_legendre(200, 0.0, 6.0);
    double rad = 0.0;
    for (size_t i = 0; i < radial.nodes.size(); ++i) {
        double r = radial.nodes[i];
        rad += radial.weights[i] * std::pow(r, a + b + 1) *
               std::exp(-2.0 * M_PI * r * r);
    }
    int nt = 256;
    double re = 0.0, im = 0.0;
    for (int i = 0; i < nt; ++i) {
        double t = 2.0 * M_PI * i / nt;
        re += std::cos((a - b) * t);
        im += std::sin((a - b) * t);
    }
    double dt = 2.0 * M_PI / nt;
    return {rad * re * dt, rad * im * dt};
}

VerificationReport check_gaussian_moment(int a, int b, double tol) {
    auto [re, im] = gaussian_moment_numeric(a, b);
    double err = std::max(std::abs(re - gaussian_moment(a, b).to_double()),
                          std::abs(im));
    return VerificationReport::float_check("gaussian_moment", {{"a", a}, {"b", b}},
                                           err, tol);
}

QuatE slice_gaussian_inner(const SliceCoeffMatrix& f, const SliceCoeffMatrix& g) {
    // <f, g> = int conj(g) f: the term pair (kg,jg) x (kf,jf) integrates
    // z^{kg+jf} zbar^{jg+kf}, so only matched total powers survive.
    QuatE acc;
    for (int kg = 0; kg < g.order(); ++kg)
        for (int jg = 0; jg <= g.row(kg).trunc_degree(); ++jg) {
            QuatE cg = g.coeff(kg, jg);
            if (cg.is_zero()) continue;
            for (int kf = 0; kf < f.order(); ++kf)
                for (int jf = 0; jf <= f.row(kf).trunc_degree(); ++jf) {
                    ExactScalar mom = gaussian_moment(kg + jf, jg + kf);
                    if (mom.is_zero()) continue;
                    acc = acc + cg.conj() * f.coeff(kf, jf) * mom;
                }
        }
    return acc;
}

ExactScalar fock_T_norm_sq(const std::vector<QuatE>& alpha, int n) {
    ExactScalar sum;
    for (size_t j = 0; j < alpha.size(); ++j)
        sum += alpha[j].norm_sq() * ExactScalar::two_pi_pow(static_cast<long>(j)) *
               ExactScalar(Rational(factorial(static_cast<long>(j))));
    return sum * ExactScalar(Rational(factorial(n), 2)) * ExactScalar::two_pi_pow(n);
}

VerificationReport check_qhermite_rodrigues(int m, int p) {
    bool ok = qhermite(m, p).matrix == qhermite_rodrigues_slice(m, p);
    return VerificationReport::exact_check("qhermite_rodrigues", {{"m", m}, {"p", p}},
                                           ok);
}

VerificationReport check_qhermite_orthogonality(int m, int p, int m2, int p2) {
    QuatE lhs = slice_gaussian_inner(qhermite(m, p).matrix, qhermite(m2, p2).matrix);
    QuatE rhs;
    if (m == m2 && p == p2)
        rhs = QuatE::real(ExactScalar(Rational(factorial(m) * factorial(p), 2)) *
                          ExactScalar::two_pi_pow(m + p));
    return VerificationReport::exact_check(
        "qhermite_orthogonality", {{"m", m}, {"p", p}, {"m2", m2}, {"p2", p2}},
        lhs == rhs);
}

VerificationReport check_fock_norm_consistency(const std::vector<QuatE>& alpha,
                                               int n) {
    SliceCoeffMatrix f(n + 1);
    for (size_t j = 0; j < alpha.size(); ++j) {
        QHermitePoly h = qhermite(n, static_cast<int>(j));
        f = f + h.matrix.right_mul(alpha[j]);
    }
    QuatE self = slice_gaussian_inner(f, f);
    QuatE expect = QuatE::real(fock_T_norm_sq(alpha, n));
    return VerificationReport::exact_check(
        "fock_norm_consistency", {{"n", n}, {"len", static_cast<long>(alpha.size())}},
        self == expect);
}

}  // namespace fueterlab
