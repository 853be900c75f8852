#include "smoothpatch/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace smoothpatch {

namespace {

// Legendre polynomial P_n and derivative at x, by the three-term recurrence.
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: point count must be >= 1");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: require a < b");

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    if (n == 1) {
        rule.nodes[0] = mid;
        rule.weights[0] = b - a;
        return rule;
    }

    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Chebyshev initial guess, refined by Newton.
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto [p, d] = legendre(n, x);
            dp = d;
            double dx = p / d;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        dp = legendre(n, x).second;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

}  // namespace smoothpatch
