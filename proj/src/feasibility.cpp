#include "spindlekit/feasibility.hpp"

#include "spindlekit/lp.hpp"
#include "spindlekit/qp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spindlekit {

double Direction::angle() const {
    if (u.size() != 2) throw std::logic_error("Direction::angle: 2D only");
    return wrap_angle(std::atan2(u(1), u(0)));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int base_index_of(const PointSet& S, const Vec& s, const char* who) {
    auto idx = S.find(s);
    if (!idx) throw std::invalid_argument(std::string(who) + ": base point is not a member of the set");
    return *idx;
}

// Shared scaffold: margin = min over x != s of slack(x), vacuous for a
// singleton (margin +inf, degenerate flag).
template <typename SlackFn>
DirectionCheck check_direction(const PointSet& S, const Vec& s, const Direction& zeta, double r,
                               CertKind kind, const Tolerance& tol, SlackFn&& slack,
                               const char* who) {
    if (s.size() != S.dim() || zeta.u.size() != S.dim())
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
    int base = base_index_of(S, s, who);

    double margin = kInf;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (static_cast<int>(i) == base) continue;
        margin = std::min(margin, slack(S[i]));
    }

    DirectionCheck out{false,
                       NormalCertificate{base, s, zeta, r, kind, margin, S.size() == 1}};
    out.accepted = S.size() == 1 || margin >= -tol.eps();
    return out;
}

}  // namespace

DirectionCheck is_realized(const PointSet& S, const Vec& s, const Direction& zeta, double r,
                           const Tolerance& tol) {
    if (!(r > 0.0)) throw std::invalid_argument("is_realized: radius must be positive");
    return check_direction(
        S, s, zeta, r, CertKind::realized, tol,
        [&](const Vec& x) {
            Vec u = x - s;
            return u.squaredNorm() / (2.0 * r) - zeta.u.dot(u);
        },
        "is_realized");
}

DirectionCheck is_far_realized(const PointSet& S, const Vec& s, const Direction& zeta, double r,
                               const Tolerance& tol) {
    if (!(r > 0.0)) throw std::invalid_argument("is_far_realized: radius must be positive");
    return check_direction(
        S, s, zeta, r, CertKind::far_realized, tol,
        [&](const Vec& x) {
            Vec u = x - s;
            return -u.squaredNorm() / (2.0 * r) - zeta.u.dot(u);
        },
        "is_far_realized");
}

DirectionCheck is_supporting(const PointSet& S, const Vec& s, const Direction& zeta,
                             const Tolerance& tol) {
    return check_direction(
        S, s, zeta, kInf, CertKind::supporting, tol,
        [&](const Vec& x) { return -zeta.u.dot(x - s); }, "is_supporting");
}

namespace {

// Constraint geometry for the 2D arc builders: x != s contributes an arc
// centered opposite x. t = ||x-s|| / (2r).
struct ArcConstraint {
    double center;  // angle(x - s) + pi
    double t;
    double d;
};

template <typename Fn>
void for_each_constraint_2d(const PointSet& S, const Vec& s, const char* who, Fn&& fn) {
    if (S.dim() != 2) throw std::invalid_argument(std::string(who) + ": 2D only");
    if (s.size() != 2) throw std::invalid_argument(std::string(who) + ": 2D only");
    for (std::size_t i = 0; i < S.size(); ++i) {
        Vec u = S[i] - s;
        double d = u.norm();
        if (d <= S.dedup_tolerance()) continue;  // the base point itself
        fn(u, d);
    }
}

}  // namespace

ArcSet far_supported_directions_2d(const PointSet& S, const Vec& s, double r,
                                   const Tolerance& tol) {
    if (!(r > 0.0)) throw std::invalid_argument("far_supported_directions_2d: radius must be positive");
    ArcSet arcs = ArcSet::full(r, tol.ang_eps);
    for_each_constraint_2d(S, s, "far_supported_directions_2d", [&](const Vec& u, double d) {
        if (arcs.is_empty()) return;
        double t = d / (2.0 * r);
        double center = std::atan2(u(1), u(0)) + std::numbers::pi;
        if (t <= 1.0) {
            arcs.intersect_closed_arc(center, std::acos(t));
        } else if (t <= 1.0 + tol.eps() / d) {
            // Tangency blurred by rounding: the antipodal direction still
            // passes the slack test, keep it as a point.
            arcs.intersect_closed_arc(center, 0.0);
        } else {
            arcs.clear();
        }
    });
    return arcs;
}

ArcSet exterior_sphere_directions_2d(const PointSet& S, const Vec& s, double r,
                                     const Tolerance& tol) {
    if (!(r > 0.0))
        throw std::invalid_argument("exterior_sphere_directions_2d: radius must be positive");
    ArcSet arcs = ArcSet::full(r, tol.ang_eps);
    for_each_constraint_2d(S, s, "exterior_sphere_directions_2d", [&](const Vec& u, double d) {
        if (arcs.is_empty()) return;
        double t = d / (2.0 * r);
        if (t >= 1.0 - tol.eps() / d) return;  // x too far to ever block
        double center = std::atan2(u(1), u(0)) + std::numbers::pi;
        arcs.intersect_closed_arc(center, std::numbers::pi - std::acos(t));
    });
    return arcs;
}

ArcSet supporting_directions_2d(const PointSet& S, const Vec& s, const Tolerance& tol) {
    ArcSet arcs = ArcSet::full(kInf, tol.ang_eps);
    for_each_constraint_2d(S, s, "supporting_directions_2d", [&](const Vec& u, double) {
        if (arcs.is_empty()) return;
        double center = std::atan2(u(1), u(0)) + std::numbers::pi;
        arcs.intersect_closed_arc(center, std::numbers::pi / 2.0);
    });
    return arcs;
}

CertificateSearch min_norm_far_certificate(const PointSet& S, const Vec& s, double r,
                                           const Tolerance& tol) {
    if (!(r > 0.0)) throw std::invalid_argument("min_norm_far_certificate: radius must be positive");
    int base = base_index_of(S, s, "min_norm_far_certificate");

    if (S.size() == 1) {
        Vec e1 = Vec::Zero(S.dim());
        e1(0) = 1.0;
        CertificateSearch out;
        out.status = SearchStatus::accepted;
        out.optimum = 0.0;
        out.certificate = NormalCertificate{base, s,    Direction(e1), r, CertKind::far_realized,
                                            kInf, true};
        return out;
    }

    // Rows normalized to unit length so conditioning is independent of the
    // point spread: <z, u/d> <= -d/(2r).
    const int m = static_cast<int>(S.size()) - 1;
    Eigen::MatrixXd A(m, S.dim());
    Eigen::VectorXd b(m);
    int row = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (static_cast<int>(i) == base) continue;
        Vec u = S[i] - s;
        double d = u.norm();
        A.row(row) = (u / d).transpose();
        b(row) = -d / (2.0 * r);
        ++row;
    }

    QpResult qp = min_norm_in_polyhedron(A, b, 100 * m);
    CertificateSearch out;
    out.optimum = qp.objective;
    if (qp.status == QpStatus::iteration_limit) {
        out.status = SearchStatus::iteration_limit;
        return out;
    }
    if (qp.status == QpStatus::infeasible || !(qp.objective > 0.0) ||
        qp.objective > 1.0 + tol.eps()) {
        out.status = SearchStatus::infeasible;
        return out;
    }

    // The slack test on the normalized minimizer is the authority.
    DirectionCheck check = is_far_realized(S, s, Direction(qp.x), r, tol);
    out.status = check.accepted ? SearchStatus::accepted : SearchStatus::infeasible;
    if (check.accepted) out.certificate = check.certificate;
    return out;
}

CertificateSearch supporting_direction_lp(const PointSet& S, const Vec& s, const Tolerance& tol) {
    int base = base_index_of(S, s, "supporting_direction_lp");
    const int n = S.dim();

    if (S.size() == 1) {
        Vec e1 = Vec::Zero(n);
        e1(0) = 1.0;
        CertificateSearch out;
        out.status = SearchStatus::accepted;
        out.optimum = kInf;
        out.certificate = NormalCertificate{base, s,    Direction(e1), kInf, CertKind::supporting,
                                            kInf, true};
        return out;
    }

    const int m = static_cast<int>(S.size()) - 1;
    Eigen::MatrixXd U(m, n);
    int row = 0;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (static_cast<int>(i) == base) continue;
        Vec u = S[i] - s;
        U.row(row++) = (u / u.norm()).transpose();
    }

    // Shift z = w - 1 so the box ||z||_inf <= 1 becomes 0 <= w <= 2.
    // Stage 1 variables: (w, delta); constraints U w + delta <= U 1, w <= 2.
    Eigen::MatrixXd A(m + n, n + 1);
    Eigen::VectorXd b(m + n);
    A.setZero();
    for (int i = 0; i < m; ++i) {
        A.block(i, 0, 1, n) = U.row(i);
        A(i, n) = 1.0;
        b(i) = U.row(i).sum();
    }
    for (int j = 0; j < n; ++j) {
        A(m + j, j) = 1.0;
        b(m + j) = 2.0;
    }
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n + 1);
    c(n) = 1.0;

    CertificateSearch out;
    LpResult stage1 = simplex_max(c, A, b);
    if (stage1.status != LpStatus::optimal) {
        out.status = SearchStatus::iteration_limit;
        return out;
    }
    out.optimum = stage1.value;

    auto try_accept = [&](const Eigen::VectorXd& w) -> bool {
        Vec z = w - Vec::Ones(n);
        if (z.norm() <= tol.abs_eps) return false;
        DirectionCheck check = is_supporting(S, s, Direction(z), tol);
        if (!check.accepted) return false;
        out.status = SearchStatus::accepted;
        out.certificate = check.certificate;
        return true;
    };

    if (stage1.value > tol.abs_eps) {
        Eigen::VectorXd w = stage1.x.head(n);
        if (try_accept(w)) return out;
    }

    // Zero optimum: the polar cone may still contain a nonzero direction on a
    // degenerate face. Probe each coordinate extreme inside the cone.
    Eigen::MatrixXd A2(m + n, n);
    Eigen::VectorXd b2(m + n);
    A2.setZero();
    for (int i = 0; i < m; ++i) {
        A2.block(i, 0, 1, n) = U.row(i);
        b2(i) = U.row(i).sum();
    }
    for (int j = 0; j < n; ++j) {
        A2(m + j, j) = 1.0;
        b2(m + j) = 2.0;
    }
    for (int j = 0; j < n; ++j) {
        for (double sgn : {1.0, -1.0}) {
            Eigen::VectorXd c2 = Eigen::VectorXd::Zero(n);
            c2(j) = sgn;
            LpResult r2 = simplex_max(c2, A2, b2);
            if (r2.status != LpStatus::optimal) continue;
            double extent = sgn * (r2.x(j) - 1.0);
            if (extent <= tol.abs_eps) continue;
            if (try_accept(r2.x)) return out;
        }
    }

    out.status = SearchStatus::infeasible;
    return out;
}

}  // namespace spindlekit
