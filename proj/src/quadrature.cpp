#include "fueterlab/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace fueterlab {

// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
// orthogonal-polynomial recurrence, weights mu_0 * (first eigenvector
// component)^2.
static QuadratureRule golub_welsch(const std::vector<double>& off_diag, double mu0) {
    int n = static_cast<int>(off_diag.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) J(k, k + 1) = J(k + 1, k) = off_diag[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigensolver failed");
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        r.nodes[k] = es.eigenvalues()(k);
        double v0 = es.eigenvectors()(0, k);
        r.weights[k] = mu0 * v0 * v0;
    }
    return r;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
    std::vector<double> off(n - 1);
    for (int k = 1; k < n; ++k)
        off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    QuadratureRule r = golub_welsch(off, 2.0);
    // affine map from [-1, 1]
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int k = 0; k < n; ++k) {
        r.nodes[k] = mid + half * r.nodes[k];
        r.weights[k] *= half;
    }
    return r;
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::domain_error("gauss_hermite: n must be >= 1");
    std::vector<double> off(n - 1);
    for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(0.5 * k);
    return golub_welsch(off, std::sqrt(M_PI));
}

}  // namespace fueterlab
