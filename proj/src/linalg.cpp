#include "poslab/linalg.hpp"

#include "poslab/errors.hpp"

#include <cmath>
#include <string>

namespace poslab {

namespace {

// Smallest |R_ii| must stay above kRankTol times the largest, over the first
// `count` pivots.
void check_pivots(const Matrix& r, int count) {
    double largest = 0.0;
    for (int i = 0; i < count; ++i) {
        largest = std::max(largest, std::abs(r(i, i)));
    }
    for (int i = 0; i < count; ++i) {
        if (std::abs(r(i, i)) < kRankTol * largest || largest == 0.0) {
            throw RankDeficient("pivot " + std::to_string(i) + " below rank tolerance");
        }
    }
}

}  // namespace

SubspaceBasis SubspaceBasis::make(Matrix basis) {
    const int n = static_cast<int>(basis.rows());
    const int k = static_cast<int>(basis.cols());
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("SubspaceBasis: need 1 <= k <= n");
    }
    const Matrix gram = basis.transpose() * basis;
    const double err = (gram - Matrix::Identity(k, k)).cwiseAbs().maxCoeff();
    if (err > kOrthoTol) {
        throw DomainError("SubspaceBasis: columns not orthonormal");
    }
    return SubspaceBasis{n, k, std::move(basis)};
}

Matrix gaussian_matrix(int rows, int cols, RngStream& rng) {
    if (rows < 1 || cols < 1) {
        throw DomainError("gaussian_matrix: rows, cols >= 1 required");
    }
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            m(i, j) = rng.normal();
        }
    }
    return m;
}

SubspaceBasis orthonormal_columns(const Matrix& m) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    if (cols > rows) {
        throw DomainError("orthonormal_columns: cols <= rows required");
    }
    Eigen::HouseholderQR<Matrix> qr(m);
    check_pivots(qr.matrixQR(), cols);
    Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    return SubspaceBasis::make(std::move(q));
}

SubspaceBasis kernel_basis(const Matrix& a) {
    const int d = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (d >= n) {
        throw DomainError("kernel_basis: need d < n");
    }
    // One factorization of A^T yields both the row-space and the kernel
    // columns of the full orthogonal factor.
    Eigen::HouseholderQR<Matrix> qr(a.transpose());
    check_pivots(qr.matrixQR(), d);
    Matrix q_full = qr.householderQ() * Matrix::Identity(n, n);
    Matrix kernel = q_full.rightCols(n - d);
    return SubspaceBasis::make(std::move(kernel));
}

SubspaceBasis complement(const SubspaceBasis& b) {
    if (b.k == b.n) {
        throw DomainError("complement: V^perp is the zero space for k = n");
    }
    Eigen::HouseholderQR<Matrix> qr(b.basis);
    Matrix q_full = qr.householderQ() * Matrix::Identity(b.n, b.n);
    return SubspaceBasis::make(q_full.rightCols(b.n - b.k));
}

Matrix random_orthogonal(int n, RngStream& rng) {
    if (n < 1) {
        throw DomainError("random_orthogonal: n >= 1 required");
    }
    const Matrix g = gaussian_matrix(n, n, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix& r = qr.matrixQR();
    // Plain QR of a Gaussian matrix is not Haar; fix the sign ambiguity by
    // forcing the diagonal of R nonnegative (zero treated as +).
    for (int i = 0; i < n; ++i) {
        if (r(i, i) < 0.0) {
            q.col(i) = -q.col(i);
        }
    }
    return q;
}

SubspaceBasis haar_subspace(int n, int k, RngStream& rng, SubspaceMethod method) {
    if (n < 1 || k < 1 || k > n) {
        throw DomainError("haar_subspace: need 1 <= k <= n");
    }
    if (method == SubspaceMethod::kKernel && k == n) {
        throw DomainError("haar_subspace: kernel method requires k < n");
    }
    for (int attempt = 0; attempt < kMaxResample; ++attempt) {
        try {
            if (method == SubspaceMethod::kKernel) {
                return kernel_basis(gaussian_matrix(n - k, n, rng));
            }
            return orthonormal_columns(gaussian_matrix(n, k, rng));
        } catch (const RankDeficient&) {
            // Probability-zero event for Gaussian draws; retry with fresh draws.
        }
    }
    throw SamplerFailure("haar_subspace: rank deficient after " +
                         std::to_string(kMaxResample) + " attempts");
}

}  // namespace poslab
