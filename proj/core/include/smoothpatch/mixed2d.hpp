#pragma once

#include "smoothpatch/bspline.hpp"

namespace smoothpatch {

/// Basis function of the 2D mixed space on the unit square. The index pair
/// refers to the coarse tensor grid for S1/S1bar and the fine grid for S2.
struct MixedId2d {
    MixedGroup group;
    int j1, j2;
};

/// Mixed degree-and-regularity space on [0,1]^2: tensor products of interior
/// coarse functions, truncated coarse functions along the boundary bands, and
/// fine functions in the boundary strips. Not a plain tensor product space.
struct MixedSpace2d {
    int s = 1, p1 = 2, k = 2;
    MixedBasis1d line;
    std::vector<MixedId2d> functions;

    int dim() const { return static_cast<int>(functions.size()); }
    int fine_dim() const { return line.fine.dim() * line.fine.dim(); }

    /// Univariate fine-space coefficient factors of the product function.
    std::pair<Vector, Vector> factor_coeffs(const MixedId2d& f) const;
    /// Coefficients in the fine tensor-product space, flattened as j1 * n2 + j2.
    Vector fine_coeffs(const MixedId2d& f) const;
    double eval(const MixedId2d& f, int d1, int d2, double x1, double x2) const;
    /// Value of the spline with the given mixed coefficients.
    double eval_combination(const Vector& coeffs, int d1, int d2, double x1, double x2) const;

    int count(MixedGroup g) const;
};

MixedSpace2d build_mixed_2d(int s, int p1, int k);

/// Closed-form dimension of the 2D mixed space.
int mixed_dim_2d(int s, int p1, int k);

/// Least-squares coordinates of a fine tensor-product element in the mixed
/// basis; exact (to roundoff) when the element lies in the mixed space.
Vector project_into_mixed(const MixedSpace2d& m, const Vector& fine_tensor_coeffs);

}  // namespace smoothpatch
