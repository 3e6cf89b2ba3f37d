#include "spindlekit/qp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace spindlekit {

namespace {
constexpr double kNullTol = 1e-18;  // ||z||^2 below this counts as in-span
constexpr double kDualTol = 1e-12;
}  // namespace

QpResult min_norm_in_polyhedron(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                                int iteration_cap, double tol) {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    const double inf = std::numeric_limits<double>::infinity();
    const double scale = m > 0 ? std::max(1.0, b.cwiseAbs().maxCoeff()) : 1.0;

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    std::vector<int> W;
    std::vector<double> lam;
    int used = 0;

    auto result = [&](QpStatus st) {
        QpResult r;
        r.status = st;
        r.x = x;
        r.objective = x.norm();
        r.active = W;
        std::sort(r.active.begin(), r.active.end());
        return r;
    };

    while (true) {
        // Most violated constraint; ties go to the lowest index.
        int p = -1;
        double worst = tol * scale;
        for (int i = 0; i < m; ++i) {
            double v = A.row(i).dot(x) - b(i);
            if (v > worst) {
                worst = v;
                p = i;
            }
        }
        if (p < 0) return result(QpStatus::optimal);

        const Eigen::VectorXd a = A.row(p).transpose();
        double u = 0.0;
        while (true) {
            if (++used > iteration_cap) return result(QpStatus::iteration_limit);

            const int k = static_cast<int>(W.size());
            Eigen::VectorXd rho(k);
            Eigen::VectorXd z = a;
            if (k > 0) {
                Eigen::MatrixXd N(n, k);
                for (int j = 0; j < k; ++j) N.col(j) = A.row(W[j]).transpose();
                rho = (N.transpose() * N).ldlt().solve(N.transpose() * a);
                z -= N * rho;
            }

            double viol = a.dot(x) - b(p);
            if (viol <= tol * scale) {
                // p went tight during partial steps; record its multiplier.
                if (u > 0.0) {
                    W.push_back(p);
                    lam.push_back(u);
                }
                break;
            }

            double zz = z.squaredNorm();
            double t2 = zz > kNullTol ? viol / zz : inf;
            double t1 = inf;
            int blocker = -1;
            for (int j = 0; j < k; ++j) {
                if (rho(j) > kDualTol) {
                    double t = lam[j] / rho(j);
                    if (t < t1) {
                        t1 = t;
                        blocker = j;
                    }
                }
            }

            double t = std::min(t1, t2);
            if (t == inf) return result(QpStatus::infeasible);

            if (zz > kNullTol) x -= t * z;
            for (int j = 0; j < k; ++j) lam[j] -= t * rho(j);
            u += t;

            if (t2 <= t1) {
                W.push_back(p);
                lam.push_back(u);
                break;
            }
            W.erase(W.begin() + blocker);
            lam.erase(lam.begin() + blocker);
        }
    }
}

}  // namespace spindlekit
