#pragma once

#include <string>
#include <vector>

#include "smoothpatch/bspline.hpp"

namespace smoothpatch {

using Point = Eigen::Vector2d;

/// Tensor-product spline patch mapping [0,1]^2 into the plane; bilinear
/// patches are the degree-1 special case with a 2x2 net.
struct Patch {
    UnivariateSpace space;  // identical in both directions
    Matrix cx, cy;          // control net, entry (j1, j2)

    int net_size() const { return space.dim(); }
    Point point(double x1, double x2) const { return deriv(0, 0, x1, x2); }
    Point deriv(int d1, int d2, double x1, double x2) const;
    Eigen::Matrix2d jacobian(double x1, double x2) const;
};

Patch bilinear_patch(const Point& c00, const Point& c10, const Point& c01, const Point& c11);

/// Determinant sign constancy of the Jacobian on a sample grid.
bool is_regular(const Patch& p, int grid = 20);

/// One of the 8 symmetries of the unit square: an optional coordinate swap
/// followed by optional reflections of each coordinate.
struct SquareSymmetry {
    bool swap = false, flip1 = false, flip2 = false;

    std::pair<double, double> apply(double x1, double x2) const;
};

/// Derivative of F composed with a square symmetry (the view of the patch in
/// a reoriented frame).
Point oriented_deriv(const Patch& p, const SquareSymmetry& sigma, int d1, int d2, double x1,
                     double x2);

// Side indices of the unit square: 0: {0}x[0,1], 1: {1}x[0,1],
// 2: [0,1]x{0}, 3: [0,1]x{1}.
Point side_point(const Patch& p, int side, double t);

/// Symmetry mapping the standard side {0}x[0,1] onto the given side; with
/// `reverse` the edge parameter runs against the side's natural direction.
SquareSymmetry side_to_standard(int side, bool reverse);

struct EdgeSide {
    int patch = -1;
    int side = -1;
    SquareSymmetry sigma;  // F o sigma puts the edge at {0}x[0,1]
};

/// Edge of the multi-patch domain. For inner edges both sides are oriented
/// consistently (same edge parameter) and side 0 is the one whose oriented
/// Jacobian determinant is negative along the edge.
struct Edge {
    bool inner = false;
    EdgeSide side0, side1;  // side1 unused for boundary edges
};

// Corner indices: 0: (0,0), 1: (1,0), 2: (1,1), 3: (0,1).
struct PatchCorner {
    int patch = -1;
    int corner = -1;
};

/// Vertex with its counterclockwise fan. For an inner vertex, fan edge rho
/// precedes fan patch rho cyclically; a boundary fan is open and carries one
/// extra edge at the end.
struct Vertex {
    Point pos;
    bool inner = false;
    std::vector<PatchCorner> fan_patches;
    std::vector<int> fan_edges;

    int patch_valency() const { return static_cast<int>(fan_patches.size()); }
    int edge_valency() const { return static_cast<int>(fan_edges.size()); }
};

struct MultiPatchDomain {
    std::string name;
    std::vector<Patch> patches;
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;

    int inner_edge_count() const;
    int boundary_edge_count() const;
};

inline constexpr double kTopologyTol = 1e-9;

/// Edge/vertex extraction with counterclockwise fans. Throws on T-junctions
/// or partial edge overlaps.
MultiPatchDomain build_topology(std::vector<Patch> patches, double tol = kTopologyTol);

/// Gluing data of an inner edge in the standardized frame: linear functions
/// alpha^(tau) = lambda det J(F^(tau) o sigma_tau)(0, xi) and
/// beta^(tau) = (d1 F . d2 F)/|d2 F|^2, with alpha^(0) < 0 < alpha^(1).
struct GluingData {
    BernsteinPoly alpha0, alpha1;  // degree 1
    BernsteinPoly beta0, beta1;    // degree 1
    double lambda = 1.0;
};

GluingData gluing(const MultiPatchDomain& domain, int edge_index);

struct ApproxResult {
    MultiPatchDomain domain;
    double residual = 0.0;  // max sample deviation from the input geometry
};

/// Least-squares refit of every patch into the target space, fitting each
/// shared edge curve once and imposing it on both patches; corner vertices
/// are interpolated exactly.
ApproxResult approximate_geometry(const MultiPatchDomain& domain, int pg, int rg, int k);

/// Builtin names: three-patch, five-patch, g2-three-patch.
MultiPatchDomain builtin_domain(const std::string& name);

MultiPatchDomain load_domain_json(const std::string& text);
MultiPatchDomain load_domain_file(const std::string& path);
std::string save_domain_json(const MultiPatchDomain& domain);

}  // namespace smoothpatch
