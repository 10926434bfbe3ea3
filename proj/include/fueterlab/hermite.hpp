#pragma once

#include "fueterlab/report.hpp"
#include "fueterlab/slicepoly.hpp"

namespace fueterlab {

/// Dense univariate polynomial; index i holds the coefficient of x^i.
using Poly1 = std::vector<ExactScalar>;

Poly1 poly1_derivative(const Poly1& p);
Poly1 poly1_sub(const Poly1& a, const Poly1& b);
bool poly1_equal(const Poly1& a, const Poly1& b);
double poly1_eval(const Poly1& p, double x);

/// Polynomial factor of a weighted Hermite function: the full function is
/// poly(x) * e^{-gauss_rate x^2 / 2}.
struct GaussianPoly1D {
    Poly1 poly;
    ExactScalar gauss_rate;
};

/// Polynomial part of h_k^nu built by the Rodrigues recursion
/// P_{k+1} = 2 nu x P_k - P_k'. nu must be a single positive term.
GaussianPoly1D hermite_h(int k, const ExactScalar& nu);

/// Full weighted Hermite function value P_k(x) e^{-nu x^2/2}, evaluated in
/// floats through the three-term value recurrence.
double hermite_h_eval(int k, double nu, double x);

/// ||h_k^nu||^2 = 2^k nu^k k! (pi/nu)^{1/2}.
ExactScalar hermite_norm_sq(int k, const ExactScalar& nu);

/// H_n(y) = n! sum_{j <= n/2} (-1)^j (2 pi)^j (4 pi y)^{n-2j} / (j! (n-2j)!).
Poly1 hermite_H2pi(int n);

/// Float value of the same polynomial via the recurrence
/// G_{n+1} = 4 pi y G_n - 4 pi n G_{n-1}.
double hermite_H2pi_eval(int n, double y);

/// Quaternionic Hermite polynomial H_{m,p} in the qbar-q coefficient
/// representation (row k = qbar-degree k).
struct QHermitePoly {
    int m = 0;
    int p = 0;
    SliceCoeffMatrix matrix{1};
    NCPoly body;
};

/// Closed form (2pi)^p m! sum_{s=0}^{min(m,p)} (-1)^s p! (2pi)^{m-s}
/// / (s!(m-s)!(p-s)!) qbar^{m-s} q^{p-s}.
QHermitePoly qhermite(int m, int p);

/// Independent Rodrigues oracle on a slice:
/// (2pi)^p (-1)^m e^{2 pi z zbar} d_z^m (z^p e^{-2 pi z zbar}), computed by
/// polynomial-times-Gaussian calculus; same coefficient layout as qhermite.
SliceCoeffMatrix qhermite_rodrigues_slice(int m, int p);

/// Exact slice Gaussian moment: integral over a slice plane of
/// z^a zbar^b e^{-2 pi |z|^2} = delta_{ab} a! / (2 (2pi)^a).
ExactScalar gaussian_moment(int a, int b);

/// Numeric oracle for the same integral (polar coordinates, Gauss-Legendre
/// radial nodes and a trapezoid angular sweep); returns (real, imag).
std::pair<double, double> gaussian_moment_numeric(int a, int b);

/// Compares gaussian_moment against the numeric oracle.
VerificationReport check_gaussian_moment(int a, int b, double tol);

/// <f, g> = integral of conj(g) f against the slice Gaussian; the
/// conjugate falls on the second argument and multiplies on the left.
QuatE slice_gaussian_inner(const SliceCoeffMatrix& f, const SliceCoeffMatrix& g);

/// Squared Fock norm of sum_j H_{n,j} alpha_j:
/// (n! (2pi)^n / 2) sum_j (2pi)^j j! |alpha_j|^2.
ExactScalar fock_T_norm_sq(const std::vector<QuatE>& alpha, int n);

/// qhermite(m, p) == qhermite_rodrigues_slice(m, p), exact.
VerificationReport check_qhermite_rodrigues(int m, int p);

/// <H_{m,p}, H_{m2,p2}> = delta delta m! p! (2pi)^{m+p} / 2, exact.
VerificationReport check_qhermite_orthogonality(int m, int p, int m2, int p2);

/// fock_T_norm_sq(alpha, n) equals the self inner product of the assembled
/// series sum_j H_{n,j} alpha_j, exact.
VerificationReport check_fock_norm_consistency(const std::vector<QuatE>& alpha, int n);

}  // namespace fueterlab
