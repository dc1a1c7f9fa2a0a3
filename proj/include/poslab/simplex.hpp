#ifndef POSLAB_SIMPLEX_HPP
#define POSLAB_SIMPLEX_HPP

#include <Eigen/Dense>

namespace poslab {

enum class LpStatus { kOptimal, kInfeasible, kIterationLimit, kUnbounded };

struct LpResult {
    LpStatus status;
    Eigen::VectorXd x;              // primal solution (valid when kOptimal)
    double objective = 0.0;         // c^T x at the optimum
    double infeasibility = 0.0;     // phase-one optimum (valid when kInfeasible)
};

/// Dense two-phase primal simplex for  min c^T x  s.t.  A x = b, x >= 0.
/// Bland's rule throughout; iteration cap 50 * (rows + cols). Intended for
/// the small dense systems this project produces (tens of variables).
LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c);

}  // namespace poslab

#endif
