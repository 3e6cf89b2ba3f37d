#pragma once

#include "spindlekit/arcset.hpp"
#include "spindlekit/certificates.hpp"
#include "spindlekit/geometry.hpp"

#include <vector>

namespace spindlekit {

/// One boundary piece: the span of angles on circle(generator center, radius)
/// that borders the region.
struct BoundaryArc {
    int generator = 0;
    AngleInterval span;
};

/// Convex region formed by intersecting closed disks of one common radius.
/// boundary is ordered counterclockwise; a full disk is a single [0, 2pi) arc;
/// two disks tangent at a point leave a zero-length arc pair.
struct ArcRegion {
    double radius = 0.0;
    std::vector<Vec> generators;
    std::vector<BoundaryArc> boundary;
    bool empty_flag = true;

    /// Arc endpoints as points, deduplicated within tol.eps().
    std::vector<Vec> vertices(const Tolerance& tol) const;
};

enum class Location { interior, boundary, outside };

/// Intersection of closed disks B(c; r) over the given centers, by incremental
/// arc clipping (quadratic in the number of centers, exact per step).
ArcRegion ball_intersection_2d(const std::vector<Vec>& centers, double r, const Tolerance& tol);

/// Classification of x against the region: max over generators of ||x - c||
/// compared to r with a +-tol.eps() boundary band. Empty region: everything is
/// outside.
Location region_contains(const ArcRegion& region, const Vec& x, const Tolerance& tol);

/// Supremum of ||x - p|| over region points p; attained on the boundary. Per
/// arc the maximum sits at the point antipodal to x through the arc center,
/// clamped to the arc endpoints.
double region_farthest_distance(const ArcRegion& region, const Vec& x);

/// x belongs to the intersection of all closed r-balls containing S iff every
/// feasible center (a point of K = ball_intersection_2d(S, r)) covers x, i.e.
/// region_farthest_distance(K, x) <= r. Throws when K is empty (no enclosing
/// r-ball exists at all).
Location ball_hull_membership(const PointSet& S, double r, const Vec& x, const Tolerance& tol);

/// Region cut out by far-realized certificates: disks of radius r centered at
/// base_point - r * direction. Every certified base point lands on or inside
/// the boundary by construction.
ArcRegion certificate_region(const std::vector<NormalCertificate>& certs, double r,
                             const Tolerance& tol);

/// max over supporting certificates of <zeta_s, x - s>: nonpositive inside the
/// supported half-space intersection, zero on its boundary.
double support_gap(const std::vector<NormalCertificate>& certs, const Vec& x);

}  // namespace spindlekit
