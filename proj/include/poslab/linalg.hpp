#ifndef POSLAB_LINALG_HPP
#define POSLAB_LINALG_HPP

#include "poslab/rng.hpp"

#include <Eigen/Dense>

namespace poslab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Tolerances shared across the dense kernel.
inline constexpr double kOrthoTol = 1e-10;   // max-norm of B^T B - I
inline constexpr double kSpanTol = 1e-8;     // projector / span residuals
inline constexpr double kRankTol = 1e-10;    // pivot ratio below which a matrix is rank deficient
inline constexpr int kMaxResample = 10;

enum class SubspaceMethod { kKernel, kSpan };

/// Orthonormal n x k basis representing a point of the Grassmannian G(n, k).
struct SubspaceBasis {
    int n;
    int k;
    Matrix basis;  // n rows, k columns, orthonormal

    /// Validates the orthonormality invariant (throws DomainError on violation).
    static SubspaceBasis make(Matrix basis);

    /// Orthogonal projector B B^T onto the subspace.
    Matrix projector() const { return basis * basis.transpose(); }
};

/// rows x cols matrix of iid standard normals, filled in row-major order.
Matrix gaussian_matrix(int rows, int cols, RngStream& rng);

/// Orthonormal basis with the same column span as M (thin Householder QR).
/// Throws RankDeficient when a pivot falls below kRankTol relative to the
/// largest pivot.
SubspaceBasis orthonormal_columns(const Matrix& m);

/// Orthonormal basis of ker A for a full-row-rank d x n matrix A, d < n.
/// The last n - d columns of the full Q factor of A^T.
SubspaceBasis kernel_basis(const Matrix& a);

/// Orthonormal basis of the orthogonal complement. DomainError when k = n.
SubspaceBasis complement(const SubspaceBasis& b);

/// Haar-distributed orthogonal matrix: QR of a Gaussian matrix with each
/// column of Q flipped to make the matching diagonal entry of R nonnegative.
Matrix random_orthogonal(int n, RngStream& rng);

/// Haar-random point of G(n, k), by kernel of an (n-k) x n Gaussian matrix or
/// by span of an n x k Gaussian matrix. Resamples up to kMaxResample times on
/// rank deficiency, then throws SamplerFailure.
SubspaceBasis haar_subspace(int n, int k, RngStream& rng, SubspaceMethod method);

}  // namespace poslab

#endif
