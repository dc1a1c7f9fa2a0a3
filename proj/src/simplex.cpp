#include "poslab/simplex.hpp"

#include <cmath>
#include <vector>

namespace poslab {

namespace {

constexpr double kCostEps = 1e-9;
// Entries below this never become pivots; tiny pivots wreck the tableau.
constexpr double kPivotEps = 1e-7;
// A column whose reduced cost is negative only at roundoff level and whose
// tableau column admits no pivot is a numerical artifact, not a real ray.
constexpr double kRayCostTol = 1e-6;

struct Tableau {
    Eigen::MatrixXd t;        // m x (n + m), artificials appended
    Eigen::VectorXd rhs;      // >= 0 throughout
    std::vector<int> basis;   // basis[i] = column basic in row i
    int n_struct;             // structural columns
    int iterations_left;

    void pivot(int row, int col) {
        const double p = t(row, col);
        t.row(row) /= p;
        rhs(row) /= p;
        for (int i = 0; i < t.rows(); ++i) {
            if (i == row) continue;
            const double f = t(i, col);
            if (f != 0.0) {
                t.row(i) -= f * t.row(row);
                rhs(i) -= f * rhs(row);
                if (rhs(i) < 0.0 && rhs(i) > -1e-12) rhs(i) = 0.0;
            }
        }
        basis[row] = col;
    }

    // Bland's rule: lowest-index entering column with negative reduced cost,
    // lowest basis-index leaving row among the ratio-test minimizers.
    // Returns kOptimal, kUnbounded, or kIterationLimit.
    LpStatus run_phase(const Eigen::VectorXd& cost, int allowed_cols) {
        const int m = static_cast<int>(t.rows());
        for (;;) {
            if (--iterations_left < 0) return LpStatus::kIterationLimit;

            Eigen::VectorXd dual = Eigen::VectorXd::Zero(m);
            for (int i = 0; i < m; ++i) dual(i) = cost(basis[i]);

            int entering = -1;
            int leaving = -1;
            for (int j = 0; j < allowed_cols && leaving < 0; ++j) {
                const double rc = cost(j) - dual.dot(t.col(j));
                if (rc >= -kCostEps) continue;
                entering = j;
                double best_ratio = 0.0;
                for (int i = 0; i < m; ++i) {
                    const double a = t(i, j);
                    if (a > kPivotEps) {
                        const double ratio = rhs(i) / a;
                        if (leaving < 0 || ratio < best_ratio - 1e-12 ||
                            (ratio <= best_ratio + 1e-12 && basis[i] < basis[leaving])) {
                            leaving = i;
                            best_ratio = ratio;
                        }
                    }
                }
                if (leaving < 0) {
                    if (rc < -kRayCostTol) {
#ifdef POSLAB_SIMPLEX_DEBUG
                        std::cerr << "ray col " << j << " rc=" << rc
                                  << " colmax=" << t.col(j).maxCoeff() << "\n"
                                  << t.col(j).transpose() << "\n";
#endif
                        return LpStatus::kUnbounded;
                    }
                    entering = -1;  // roundoff-level ray, skip this column
                }
            }
            if (entering < 0) return LpStatus::kOptimal;
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LpResult solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& c) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());

    Tableau tab;
    tab.n_struct = n;
    tab.t.resize(m, n + m);
    tab.t.leftCols(n) = a;
    tab.t.rightCols(m) = Eigen::MatrixXd::Identity(m, m);
    tab.rhs = b;
    tab.basis.resize(m);
    tab.iterations_left = 50 * (m + n + m);
    for (int i = 0; i < m; ++i) {
        tab.basis[i] = n + i;
        if (tab.rhs(i) < 0.0) {
            tab.rhs(i) = -tab.rhs(i);
            tab.t.row(i) = -tab.t.row(i);
            tab.t(i, n + i) = 1.0;  // keep the artificial column at +1
        }
    }

    // Phase one: minimize the artificial sum.
    Eigen::VectorXd phase1_cost = Eigen::VectorXd::Zero(n + m);
    phase1_cost.tail(m).setOnes();
    LpStatus st = tab.run_phase(phase1_cost, n + m);
    if (st != LpStatus::kOptimal) {
        return {st, Eigen::VectorXd(), 0.0, 0.0};
    }
    double infeas = 0.0;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) infeas += tab.rhs(i);
    }
    const double feas_tol = 1e-8 * (1.0 + b.cwiseAbs().maxCoeff());
    if (infeas > feas_tol) {
        return {LpStatus::kInfeasible, Eigen::VectorXd(), 0.0, infeas};
    }

    // Drive leftover artificials out of the basis on the largest structural
    // entry. A row with no usable entry is a redundant constraint; zero it
    // outright so phase two cannot ride it as a fake ray.
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        int best_col = -1;
        double best_mag = 1e-11;
        for (int j = 0; j < n; ++j) {
            if (std::abs(tab.t(i, j)) > best_mag) {
                best_mag = std::abs(tab.t(i, j));
                best_col = j;
            }
        }
        if (best_col >= 0) {
            tab.pivot(i, best_col);
        } else {
            tab.t.row(i).setZero();
            tab.rhs(i) = 0.0;
        }
    }

    // Phase two over structural columns only.
    Eigen::VectorXd phase2_cost = Eigen::VectorXd::Zero(n + m);
    phase2_cost.head(n) = c;
    st = tab.run_phase(phase2_cost, n);
    if (st != LpStatus::kOptimal) {
        return {st, Eigen::VectorXd(), 0.0, 0.0};
    }

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] < n) x(tab.basis[i]) = tab.rhs(i);
    }
    const double objective = c.dot(x);
    return {LpStatus::kOptimal, std::move(x), objective, 0.0};
}

}  // namespace poslab
