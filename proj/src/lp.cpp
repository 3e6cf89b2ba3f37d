#include "spindlekit/lp.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace spindlekit {

namespace {

constexpr double kPivTol = 1e-11;

// Tableau rows: m constraint rows + 1 objective row (maximization, stored as
// z-row of reduced costs). Columns: structural + slack + artificial + rhs.
struct Tableau {
    Eigen::MatrixXd t;
    std::vector<int> basis;
    int rows, cols;  // constraint rows, total columns incl. rhs

    void pivot(int pr, int pc) {
        t.row(pr) /= t(pr, pc);
        for (int i = 0; i <= rows; ++i) {
            if (i == pr) continue;
            double f = t(i, pc);
            if (f != 0.0) t.row(i) -= f * t.row(pr);
        }
        basis[pr] = pc;
    }

    // Bland: entering = lowest-index column with positive reduced cost,
    // leaving = lowest-index basic variable among the ratio-test ties.
    LpStatus iterate(int nvars, int cap, int& used) {
        while (used < cap) {
            int pc = -1;
            for (int j = 0; j < nvars; ++j) {
                if (t(rows, j) > kPivTol) {
                    pc = j;
                    break;
                }
            }
            if (pc < 0) return LpStatus::optimal;
            int pr = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < rows; ++i) {
                if (t(i, pc) > kPivTol) {
                    double ratio = t(i, cols - 1) / t(i, pc);
                    if (ratio < best - 1e-12 ||
                        (ratio < best + 1e-12 && (pr < 0 || basis[i] < basis[pr]))) {
                        best = ratio;
                        pr = i;
                    }
                }
            }
            if (pr < 0) return LpStatus::unbounded;
            pivot(pr, pc);
            ++used;
        }
        return LpStatus::iteration_limit;
    }
};

}  // namespace

LpResult simplex_max(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                     const Eigen::VectorXd& b, int iteration_cap) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());

    // Count artificials: rows whose slack basis would start negative.
    std::vector<bool> neg(m);
    int nart = 0;
    for (int i = 0; i < m; ++i) {
        neg[i] = b(i) < 0.0;
        if (neg[i]) ++nart;
    }

    const int nvars = n + m + nart;
    Tableau tb;
    tb.rows = m;
    tb.cols = nvars + 1;
    tb.t = Eigen::MatrixXd::Zero(m + 1, tb.cols);
    tb.basis.assign(m, -1);

    int art = n + m;
    for (int i = 0; i < m; ++i) {
        double sgn = neg[i] ? -1.0 : 1.0;
        tb.t.block(i, 0, 1, n) = sgn * A.row(i);
        tb.t(i, n + i) = sgn;  // slack
        tb.t(i, tb.cols - 1) = sgn * b(i);
        if (neg[i]) {
            tb.t(i, art) = 1.0;
            tb.basis[i] = art++;
        } else {
            tb.basis[i] = n + i;
        }
    }

    int used = 0;
    if (nart > 0) {
        // Phase 1: maximize -sum(artificials); z-row = sum of artificial rows.
        for (int i = 0; i < m; ++i)
            if (neg[i]) tb.t.row(m) += tb.t.row(i);
        for (int j = n + m; j < nvars; ++j) tb.t(m, j) = 0.0;
        // An artificial that left the basis never needs to re-enter.
        LpStatus st = tb.iterate(n + m, iteration_cap, used);
        if (st != LpStatus::optimal) return {st, Eigen::VectorXd::Zero(n), 0.0};
        if (tb.t(m, tb.cols - 1) > 1e-8) return {LpStatus::infeasible, Eigen::VectorXd::Zero(n), 0.0};
        // Drive any artificial still basic (at zero) out if possible.
        for (int i = 0; i < m; ++i) {
            if (tb.basis[i] >= n + m) {
                for (int j = 0; j < n + m; ++j) {
                    if (std::fabs(tb.t(i, j)) > kPivTol) {
                        tb.pivot(i, j);
                        break;
                    }
                }
            }
        }
    }

    // Phase 2 objective: reduced costs of c over the current basis.
    tb.t.row(m).setZero();
    tb.t.block(m, 0, 1, n) = c.transpose();
    for (int i = 0; i < m; ++i) {
        int bj = tb.basis[i];
        if (bj < n && std::fabs(c(bj)) > 0.0) tb.t.row(m) -= c(bj) * tb.t.row(i);
    }
    // Artificial columns are retired after phase 1.
    const int live = n + m;
    LpStatus st = tb.iterate(live, iteration_cap, used);
    if (st != LpStatus::optimal) return {st, Eigen::VectorXd::Zero(n), 0.0};

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m; ++i)
        if (tb.basis[i] < n) x(tb.basis[i]) = tb.t(i, tb.cols - 1);
    return {LpStatus::optimal, x, c.dot(x)};
}

}  // namespace spindlekit
