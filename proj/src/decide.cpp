#include "poslab/decide.hpp"

#include "poslab/errors.hpp"
#include "poslab/simplex.hpp"

#include <cmath>
#include <utility>

namespace poslab {

namespace {

// Optimal value and witness of  max delta  s.t.  t = B c, t >= delta * 1,
// sum(t) = 1. The normalization excludes t = 0 and fixes scale; delta is the
// smallest component of the best witness, the decision quantity for both
// positivity verdicts.
struct MaxMinSlack {
    bool system_feasible;     // false when even sum(t) = 1 is unreachable on span(B)
    double delta = 0.0;
    double infeasibility = 0.0;
    Vector witness;           // t with sum(t) = 1 (when system_feasible)
};

MaxMinSlack solve_subspace_program(const SubspaceBasis& b) {
    const int n = b.n;
    const int k = b.k;
    const int nvars = 2 * k + 2 + n;  // c+, c-, delta+, delta-, slacks

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, nvars);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    a.block(0, 0, n, k) = b.basis;
    a.block(0, k, n, k) = -b.basis;
    a.col(2 * k).head(n).setConstant(-1.0);
    a.col(2 * k + 1).head(n).setConstant(1.0);
    a.block(0, 2 * k + 2, n, n) = -Eigen::MatrixXd::Identity(n, n);
    const Eigen::RowVectorXd col_sums = b.basis.colwise().sum();
    a.block(n, 0, 1, k) = col_sums;
    a.block(n, k, 1, k) = -col_sums;
    rhs(n) = 1.0;

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(nvars);
    cost(2 * k) = -1.0;  // min (delta-) - (delta+)  ==  max delta
    cost(2 * k + 1) = 1.0;

    const LpResult lp = solve_lp(a, rhs, cost);
    switch (lp.status) {
        case LpStatus::kOptimal:
            break;
        case LpStatus::kInfeasible:
            // sum(t) = 1 has no solution on span(B): 1 is orthogonal to V.
            return {false, 0.0, lp.infeasibility, Vector()};
        default:
            throw NumericalFailure("positivity LP: iteration cap or unbounded ray");
    }
    const double delta = lp.x(2 * k) - lp.x(2 * k + 1);
    const Vector coeffs = lp.x.head(k) - lp.x.segment(k, k);
    return {true, delta, 0.0, b.basis * coeffs};
}

Decision verdict_from(const MaxMinSlack& r, bool feasible) {
    Decision d;
    d.feasible = feasible;
    d.margin = r.system_feasible ? r.delta : -r.infeasibility;
    d.boundary = std::abs(d.margin) < kBoundaryBand;
    if (feasible) {
        d.certificate = r.witness;
    }
    return d;
}

}  // namespace

PointCloud PointCloud::make(Matrix points) {
    const int count = static_cast<int>(points.rows());
    const int dim = static_cast<int>(points.cols());
    if (count < 1 || dim < 1) {
        throw DomainError("PointCloud: count, dim >= 1 required");
    }
    if (!points.allFinite()) {
        throw DomainError("PointCloud: non-finite coordinate");
    }
    return PointCloud{count, dim, std::move(points)};
}

Decision contains_positive(const SubspaceBasis& b, double tol) {
    if (tol <= 0.0) {
        throw DomainError("contains_positive: tol > 0 required");
    }
    const MaxMinSlack r = solve_subspace_program(b);
    return verdict_from(r, r.system_feasible && r.delta >= -tol);
}

Decision contains_strictly_positive(const SubspaceBasis& b, double tol) {
    if (tol <= 0.0) {
        throw DomainError("contains_strictly_positive: tol > 0 required");
    }
    const MaxMinSlack r = solve_subspace_program(b);
    return verdict_from(r, r.system_feasible && r.delta > tol);
}

Decision hull_contains_origin(const PointCloud& p, double tol) {
    if (tol <= 0.0) {
        throw DomainError("hull_contains_origin: tol > 0 required");
    }
    const int n = p.count;
    const int d = p.dim;
    const double scale = std::max(1.0, p.points.cwiseAbs().maxCoeff());

    // max delta  s.t.  sum_i lambda_i z_i = 0, sum(lambda) = 1,
    // lambda >= delta * 1;  substitute lambda = mu + delta * 1, mu >= 0.
    const int nvars = n + 2;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d + 1, nvars);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(d + 1);
    a.block(0, 0, d, n) = p.points.transpose();
    const Vector coord_sums = p.points.colwise().sum().transpose();
    a.col(n).head(d) = coord_sums;
    a.col(n + 1).head(d) = -coord_sums;
    a.row(d).head(n).setOnes();
    a(d, n) = static_cast<double>(n);
    a(d, n + 1) = -static_cast<double>(n);
    rhs(d) = 1.0;

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(nvars);
    cost(n) = -1.0;
    cost(n + 1) = 1.0;

    const LpResult lp = solve_lp(a, rhs, cost);
    Decision out;
    switch (lp.status) {
        case LpStatus::kOptimal: {
            const double delta = lp.x(n) - lp.x(n + 1);
            out.feasible = delta >= -tol;
            out.margin = delta;
            out.boundary = std::abs(delta) < kBoundaryBand;
            if (out.feasible) {
                out.certificate = Vector(lp.x.head(n).array() + delta);
            }
            return out;
        }
        case LpStatus::kInfeasible:
            // The weights cannot even reproduce the origin affinely.
            out.feasible = false;
            out.margin = -lp.infeasibility / scale;
            out.boundary = lp.infeasibility < kBoundaryBand * scale;
            return out;
        default:
            throw NumericalFailure("hull LP: iteration cap or unbounded ray");
    }
}

bool sign_oracle_line(const Vector& v) {
    if (v.size() == 0 || v.isZero(0.0)) {
        throw DomainError("sign_oracle_line: zero vector");
    }
    bool has_pos = false;
    bool has_neg = false;
    for (int i = 0; i < v.size(); ++i) {
        if (v(i) > 0.0) has_pos = true;
        if (v(i) < 0.0) has_neg = true;
    }
    return !(has_pos && has_neg);
}

bool sign_oracle_hyperplane(const Vector& a) {
    if (a.size() == 0 || a.isZero(0.0)) {
        throw DomainError("sign_oracle_hyperplane: zero vector");
    }
    bool has_pos = false;
    bool has_neg = false;
    bool has_zero = false;
    for (int i = 0; i < a.size(); ++i) {
        if (a(i) > 0.0) has_pos = true;
        else if (a(i) < 0.0) has_neg = true;
        else has_zero = true;
    }
    return has_zero || (has_pos && has_neg);
}

}  // namespace poslab
