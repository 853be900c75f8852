#pragma once

#include <vector>

namespace smoothpatch {

/// Gauss-Legendre rule on an interval [a, b].
struct QuadratureRule {
    std::vector<double> nodes;    // strictly increasing, interior to (a, b)
    std::vector<double> weights;  // positive, sum to b - a
    int order() const { return static_cast<int>(nodes.size()); }
};

/// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace smoothpatch
