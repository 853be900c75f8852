#pragma once

#include <vector>

#include "smoothpatch/linalg.hpp"

namespace smoothpatch {

/// Univariate spline space S_h^{p,r}([0,1]) on the open knot vector with
/// multiplicity p+1 at 0 and 1 and p-r at the k uniform interior breakpoints.
struct UnivariateSpace {
    int p = 0;  // degree
    int r = 0;  // interior regularity, 0 <= r <= p-1 (r = p for k = 0 is allowed
                // internally since there are no interior knots)
    int k = 0;  // interior breakpoint count
    double h = 1.0;
    std::vector<double> knots;

    int dim() const { return p + 1 + k * (p - r); }

    bool operator==(const UnivariateSpace& o) const { return p == o.p && r == o.r && k == o.k; }
};

UnivariateSpace make_space(int p, int r, int k);

inline constexpr int kMaxDerivative = 6;

/// Values of the d-th derivative of the p+1 basis functions that are nonzero
/// at x. `first` is the index of the first of them.
struct LocalBasis {
    int first = 0;
    Matrix ders;  // (dmax+1) x (p+1)
};

/// One-sided limits are right-continuous except at x = 1 (left limit).
LocalBasis eval_local(const UnivariateSpace& s, double x, int dmax);

/// Dense vector of all basis function d-th derivatives at x.
Vector eval_basis(const UnivariateSpace& s, int d, double x);

/// d-th derivative of the spline with the given coefficients at x.
double eval_spline(const UnivariateSpace& s, const Vector& coeffs, int d, double x);

/// Knot-span index (0..k) containing x.
int span_of(const UnivariateSpace& s, double x);

/// Per-span Bernstein (Bezier) coefficients, one row per knot span.
Matrix to_bezier(const UnivariateSpace& s, const Vector& coeffs);

/// Inverse of to_bezier; requires the piecewise polynomial to lie in s.
Vector from_bezier(const UnivariateSpace& s, const Matrix& bez);

/// Derivative as an element of S_h^{p-1,r-1}.
std::pair<UnivariateSpace, Vector> derivative(const UnivariateSpace& s, const Vector& coeffs);

/// Polynomial on [0,1] in Bernstein form, used for the gluing-function algebra.
struct BernsteinPoly {
    Vector coeffs;  // degree = coeffs.size() - 1
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;

    static BernsteinPoly constant(double c);
    static BernsteinPoly linear(double v0, double v1);  // values at 0 and 1
    BernsteinPoly times(const BernsteinPoly& o) const;
    BernsteinPoly pow(int e) const;
};

/// Exact product of a spline and a polynomial, as an element of
/// S_h^{p+deg(b), r}. Throws on degree overflow past `max_degree` when given.
std::pair<UnivariateSpace, Vector> spline_multiply(const UnivariateSpace& s, const Vector& coeffs,
                                                   const BernsteinPoly& b, int max_degree = -1);

/// Coefficients mu with N_i^{coarse} = sum_j mu(j,i) N_j^{fine}; coarse and
/// fine share the breakpoints and coarse is a subspace of fine.
Matrix representation_matrix(const UnivariateSpace& coarse, const UnivariateSpace& fine);

/// Fine-space coefficients of the truncation of coarse basis function i:
/// the mu column with entries j <= s and j >= n2-s-1 zeroed.
Vector truncate(const UnivariateSpace& coarse, const UnivariateSpace& fine, int s, int i);

/// Admissibility bound of the mesh for smoothness s and interior degree p1.
int min_breakpoints(int s, int p1);
void check_admissible(int s, int p1, int k);

enum class MixedGroup { S1, S1bar, S2 };

struct Mixed1dFunction {
    MixedGroup group;
    int index;  // index in the coarse (S1, S1bar) or fine (S2) space
};

/// Ordered basis of the univariate mixed space S1 (+) S1bar (+) S2.
struct MixedBasis1d {
    int s, p1, k;
    UnivariateSpace coarse;  // (p1, p1-1)
    UnivariateSpace fine;    // (2s+1, s)
    Matrix mu;               // representation of coarse in fine
    std::vector<Mixed1dFunction> functions;
    /// Fine-space coefficients of function f (truncated columns for S1bar).
    Vector fine_coeffs(const Mixed1dFunction& f) const;
};

MixedBasis1d build_mixed_1d(int s, int p1, int k);

double binomial(int n, int j);

}  // namespace smoothpatch
