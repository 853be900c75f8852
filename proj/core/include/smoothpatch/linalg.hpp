#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace smoothpatch {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

/// Symmetric sparse matrix in coordinate form. Symmetry is enforced by
/// construction: add(i, j, v) with i != j records both (i, j) and (j, i).
class SparseSymmetricMatrix {
  public:
    explicit SparseSymmetricMatrix(int dimension) : dim_(dimension) {}

    int dimension() const { return dim_; }
    void add(int i, int j, double value);
    /// Compressed matrix; drops explicit zeros.
    SparseMatrix compressed() const;

  private:
    int dim_;
    std::vector<Triplet> entries_;
};

inline constexpr double kDefaultKernelTol = 1e-9;

/// Orthonormal basis of the numerical kernel of M. A singular value sigma
/// belongs to the kernel when sigma <= tol * sigma_max. The zero matrix has a
/// full-dimensional kernel.
Matrix nullspace(const Matrix& M, double tol = kDefaultKernelTol);

/// Direct Cholesky solve of a symmetric positive definite system.
/// Throws std::runtime_error naming the failure if the factorization breaks down.
Vector solve_spd(const SparseSymmetricMatrix& S, const Vector& b);
Vector solve_spd(const SparseMatrix& S, const Vector& b);

/// Minimizer of sum_i w_i (A_i . x - b_i)^2; rank deficiency resolved by the
/// minimum-norm solution.
Vector weighted_lstsq(const Matrix& A, const Vector& b, const Vector& w);

}  // namespace smoothpatch
