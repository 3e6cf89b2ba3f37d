#pragma once

#include <Eigen/Dense>

namespace spindlekit {

enum class LpStatus { optimal, infeasible, unbounded, iteration_limit };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Eigen::VectorXd x;
    double value = 0.0;
};

/// max c'x subject to A x <= b, x >= 0. Dense two-phase tableau simplex with
/// Bland's rule, so runs are deterministic and cycle-free. b may be negative.
/// Sized for desk-scale problems (tens of rows).
LpResult simplex_max(const Eigen::VectorXd& c, const Eigen::MatrixXd& A,
                     const Eigen::VectorXd& b, int iteration_cap = 10000);

}  // namespace spindlekit
