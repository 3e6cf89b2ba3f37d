#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace spindlekit {

using Vec = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

/// Shared tolerance policy. Comparisons on lengths use abs_eps * rel_scale,
/// comparisons on angles use ang_eps. rel_scale is max(1, diameter of the
/// input set) so that behavior is stable under rescaling.
struct Tolerance {
    double abs_eps = 1e-9;
    double rel_scale = 1.0;
    double ang_eps = 1e-12;

    double eps() const { return abs_eps * rel_scale; }
};

struct Ball {
    Vec center;
    double radius = 1.0;
    bool closed = true;
};

/// Finite labeled point set in R^n, n >= 2. Points are deduplicated at
/// ingestion (first occurrence kept) so that no two members are within
/// dedup_tolerance of each other; every member keeps a stable index.
class PointSet {
public:
    PointSet(int dim, std::vector<Vec> points, double dedup_tolerance = 1e-9,
             std::vector<std::string> labels = {});

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Vec>& points() const { return points_; }
    const Vec& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    double dedup_tolerance() const { return dedup_tolerance_; }
    int duplicates_merged() const { return duplicates_merged_; }

    /// Index of the member matching p within dedup_tolerance, if any.
    std::optional<int> find(const Vec& p) const;

private:
    int dim_;
    std::vector<Vec> points_;
    std::vector<std::string> labels_;
    double dedup_tolerance_;
    int duplicates_merged_ = 0;
};

double distance_to_set(const Vec& x, const PointSet& S);
double farthest_distance(const Vec& x, const PointSet& S);

/// Indices of members achieving the minimal distance to x, in index order.
/// A member ties when its distance is within tol.eps() of the minimum.
std::vector<int> projection_indices(const Vec& x, const PointSet& S, const Tolerance& tol);
std::vector<Vec> projections(const Vec& x, const PointSet& S, const Tolerance& tol);

/// Indices of members achieving the maximal distance to x, in index order.
std::vector<int> farthest_indices(const Vec& x, const PointSet& S, const Tolerance& tol);
std::vector<Vec> farthest_points(const Vec& x, const PointSet& S, const Tolerance& tol);

/// Max pairwise distance; 0 for a singleton.
double diameter(const PointSet& S);

/// Tolerance with rel_scale = max(1, diameter(S)).
Tolerance tolerance_for(const PointSet& S, double abs_eps = 1e-9, double ang_eps = 1e-12);

}  // namespace spindlekit
