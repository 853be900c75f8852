#include "smoothpatch/linalg.hpp"

#include <Eigen/SparseCholesky>
#include <stdexcept>
#include <string>

namespace smoothpatch {

void SparseSymmetricMatrix::add(int i, int j, double value) {
    if (value == 0.0) return;
    entries_.emplace_back(i, j, value);
    if (i != j) entries_.emplace_back(j, i, value);
}

SparseMatrix SparseSymmetricMatrix::compressed() const {
    SparseMatrix m(dim_, dim_);
    m.setFromTriplets(entries_.begin(), entries_.end());
    m.prune(0.0);
    return m;
}

Matrix nullspace(const Matrix& M, double tol) {
    if (tol <= 0.0 || tol >= 1.0) throw std::invalid_argument("nullspace: tol must be in (0,1)");
    if (M.size() == 0) return Matrix::Identity(M.cols(), M.cols());

    Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * smax && smax > 0.0) ++rank;
    return svd.matrixV().rightCols(M.cols() - rank);
}

Vector solve_spd(const SparseMatrix& S, const Vector& b) {
    Eigen::SimplicialLLT<SparseMatrix> llt(S);
    if (llt.info() != Eigen::Success) {
        // Locate the offending leading minor for the error message.
        Eigen::SimplicialLLT<SparseMatrix> probe;
        int lo = 1, hi = static_cast<int>(S.rows());
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            probe.compute(SparseMatrix(S.topLeftCorner(mid, mid)));
            if (probe.info() != Eigen::Success)
                hi = mid;
            else
                lo = mid + 1;
        }
        throw std::runtime_error("solve_spd: non-positive pivot near index " +
                                 std::to_string(lo - 1));
    }
    return llt.solve(b);
}

Vector solve_spd(const SparseSymmetricMatrix& S, const Vector& b) {
    return solve_spd(S.compressed(), b);
}

Vector weighted_lstsq(const Matrix& A, const Vector& b, const Vector& w) {
    if (A.rows() != b.size() || A.rows() != w.size())
        throw std::invalid_argument("weighted_lstsq: inconsistent sizes");
    if (w.minCoeff() < 0.0) throw std::invalid_argument("weighted_lstsq: negative weight");
    if (w.maxCoeff() <= 0.0)
        throw std::invalid_argument("weighted_lstsq: no row with positive weight");

    Vector sw = w.array().sqrt();
    Matrix As = sw.asDiagonal() * A;
    Vector bs = sw.asDiagonal() * b;
    Eigen::BDCSVD<Matrix> svd(As, Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-12);
    return svd.solve(bs);
}

}  // namespace smoothpatch
