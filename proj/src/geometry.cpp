#include "spindlekit/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spindlekit {

PointSet::PointSet(int dim, std::vector<Vec> points, double dedup_tolerance,
                   std::vector<std::string> labels)
    : dim_(dim), dedup_tolerance_(dedup_tolerance) {
    if (dim < 2) throw std::invalid_argument("PointSet: dimension must be at least 2");
    if (points.empty()) throw std::invalid_argument("PointSet: set must be nonempty");
    if (!labels.empty() && labels.size() != points.size())
        throw std::invalid_argument("PointSet: label count must match point count");

    points_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const Vec& p = points[i];
        if (p.size() != dim)
            throw std::invalid_argument("PointSet: point dimension mismatch");
        if (!p.allFinite())
            throw std::invalid_argument("PointSet: coordinates must be finite");
        bool dup = false;
        for (const Vec& q : points_) {
            if ((p - q).norm() <= dedup_tolerance_) {
                dup = true;
                break;
            }
        }
        if (dup) {
            ++duplicates_merged_;
            continue;
        }
        points_.push_back(p);
        if (!labels.empty()) labels_.push_back(labels[i]);
    }
}

std::optional<int> PointSet::find(const Vec& p) const {
    if (p.size() != dim_) return std::nullopt;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if ((p - points_[i]).norm() <= dedup_tolerance_) return static_cast<int>(i);
    }
    return std::nullopt;
}

static void check_dim(const Vec& x, const PointSet& S, const char* who) {
    if (x.size() != S.dim())
        throw std::invalid_argument(std::string(who) + ": query dimension mismatch");
}

double distance_to_set(const Vec& x, const PointSet& S) {
    check_dim(x, S, "distance_to_set");
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& p : S.points()) best = std::min(best, (x - p).norm());
    return best;
}

double farthest_distance(const Vec& x, const PointSet& S) {
    check_dim(x, S, "farthest_distance");
    double best = 0.0;
    for (const Vec& p : S.points()) best = std::max(best, (x - p).norm());
    return best;
}

// Tie rule: member j ties the extremum when d_j differs from it by at most
// tol.eps(); compare squared distances against (d* +- eps)^2 to avoid a sqrt
// per member.
std::vector<int> projection_indices(const Vec& x, const PointSet& S, const Tolerance& tol) {
    check_dim(x, S, "projection_indices");
    const double dmin = distance_to_set(x, S);
    const double cap = dmin + tol.eps();
    const double cap2 = cap * cap;
    std::vector<int> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if ((x - S[i]).squaredNorm() <= cap2) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Vec> projections(const Vec& x, const PointSet& S, const Tolerance& tol) {
    std::vector<Vec> out;
    for (int i : projection_indices(x, S, tol)) out.push_back(S[i]);
    return out;
}

std::vector<int> farthest_indices(const Vec& x, const PointSet& S, const Tolerance& tol) {
    check_dim(x, S, "farthest_indices");
    const double dmax = farthest_distance(x, S);
    const double floor_d = std::max(0.0, dmax - tol.eps());
    const double floor2 = floor_d * floor_d;
    std::vector<int> out;
    for (std::size_t i = 0; i < S.size(); ++i) {
        if ((x - S[i]).squaredNorm() >= floor2) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Vec> farthest_points(const Vec& x, const PointSet& S, const Tolerance& tol) {
    std::vector<Vec> out;
    for (int i : farthest_indices(x, S, tol)) out.push_back(S[i]);
    return out;
}

double diameter(const PointSet& S) {
    double best = 0.0;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j)
            best = std::max(best, (S[i] - S[j]).norm());
    return best;
}

Tolerance tolerance_for(const PointSet& S, double abs_eps, double ang_eps) {
    Tolerance tol;
    tol.abs_eps = abs_eps;
    tol.ang_eps = ang_eps;
    tol.rel_scale = std::max(1.0, diameter(S));
    return tol;
}

}  // namespace spindlekit
