#pragma once

#include <vector>

namespace fueterlab {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [a, b] (Golub-Welsch).
QuadratureRule gauss_legendre(int n, double a, double b);

/// Gauss-Hermite rule for the weight e^{-x^2} on the real line.
QuadratureRule gauss_hermite(int n);

}  // namespace fueterlab
