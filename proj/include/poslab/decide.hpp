#ifndef POSLAB_DECIDE_HPP
#define POSLAB_DECIDE_HPP

#include "poslab/linalg.hpp"

#include <optional>

namespace poslab {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kStrictTol = 1e-7;
inline constexpr double kBoundaryBand = 1e-6;

/// n points in R^d, one per row.
struct PointCloud {
    int count;
    int dim;
    Matrix points;  // count x dim

    static PointCloud make(Matrix points);
};

/// Feasibility verdict with witness. `margin` is the optimal value of the
/// max-min-slack program behind the verdict (negative when infeasible);
/// `boundary` flags verdicts whose margin sits inside kBoundaryBand, where a
/// floating-point verdict is unreliable.
struct Decision {
    bool feasible;
    std::optional<Vector> certificate;
    double margin;
    bool boundary;
};

/// Does span(B) contain a positive vector t (t >= 0, t != 0)? Certificate is
/// t normalized to sum 1.
Decision contains_positive(const SubspaceBasis& b, double tol = kDefaultTol);

/// Does span(B) contain a strictly positive vector (all components > tol)?
/// Maximizes the smallest component delta subject to sum(t) = 1; feasible iff
/// the optimal delta exceeds tol.
Decision contains_strictly_positive(const SubspaceBasis& b, double tol = kDefaultTol);

/// Is the origin a convex combination of the points? Certificate is the
/// weight vector lambda.
Decision hull_contains_origin(const PointCloud& p, double tol = kDefaultTol);

/// k = 1 oracle: a line span(v) contains a positive vector iff all nonzero
/// components of v share one sign.
bool sign_oracle_line(const Vector& v);

/// k = n-1 oracle: the hyperplane {t : a^T t = 0} contains a positive vector
/// iff a has a zero component or two components of opposite sign.
bool sign_oracle_hyperplane(const Vector& a);

}  // namespace poslab

#endif
