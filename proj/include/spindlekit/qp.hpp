#pragma once

#include <Eigen/Dense>
#include <vector>

namespace spindlekit {

enum class QpStatus { optimal, infeasible, iteration_limit };

struct QpResult {
    QpStatus status = QpStatus::infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;  // ||x||
    std::vector<int> active;
};

/// min ||x||^2 / 2 subject to A x <= b: the projection of the origin onto the
/// constraint polyhedron. Dual active-set iteration; each step either adds the
/// most violated constraint (moving x within the span of active normals) or
/// drops a blocking one. Infeasibility is detected when a violated constraint
/// admits no feasible step; hitting the iteration cap is reported separately.
QpResult min_norm_in_polyhedron(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                int iteration_cap, double tol = 1e-12);

}  // namespace spindlekit
