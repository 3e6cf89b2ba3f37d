#include "spindlekit/arc_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace spindlekit {

namespace {

Vec circle_point(const Vec& center, double r, double theta) {
    Vec p(2);
    p(0) = center(0) + r * std::cos(theta);
    p(1) = center(1) + r * std::sin(theta);
    return p;
}

// Closed containment of theta in [lo, hi] with the circle seam unrolled.
bool span_contains(const AngleInterval& v, double theta) {
    for (double shift : {-tau, 0.0, tau}) {
        double t = theta + shift;
        if (t >= v.lo && t <= v.hi) return true;
    }
    return false;
}

void require_dim2(const Vec& p, const char* what) {
    if (p.size() != 2) throw std::invalid_argument(std::string(what) + " must be 2-dimensional");
}

}  // namespace

std::vector<Vec> ArcRegion::vertices(const Tolerance& tol) const {
    std::vector<Vec> out;
    if (empty_flag) return out;
    double eps = tol.eps();
    // A true corner lies on two generator circles; endpoints that only mark
    // the angular seam of a split interval sit on a single circle and are
    // dropped.
    auto is_corner = [&](const Vec& p, int own) {
        for (std::size_t j = 0; j < generators.size(); ++j) {
            if (static_cast<int>(j) == own) continue;
            if (std::abs((p - generators[j]).norm() - radius) <= eps) return true;
        }
        return false;
    };
    auto push_unique = [&](const Vec& p) {
        for (const Vec& q : out)
            if ((p - q).norm() <= eps) return;
        out.push_back(p);
    };
    for (const BoundaryArc& arc : boundary) {
        if (arc.span.length() >= tau - tol.ang_eps) continue;  // full circle, no endpoints
        const Vec& a = generators[static_cast<std::size_t>(arc.generator)];
        Vec lo_pt = circle_point(a, radius, arc.span.lo);
        if (is_corner(lo_pt, arc.generator)) push_unique(lo_pt);
        if (arc.span.length() > 0.0) {
            Vec hi_pt = circle_point(a, radius, arc.span.hi);
            if (is_corner(hi_pt, arc.generator)) push_unique(hi_pt);
        }
    }
    return out;
}

ArcRegion ball_intersection_2d(const std::vector<Vec>& centers, double r, const Tolerance& tol) {
    if (centers.empty()) throw std::invalid_argument("ball_intersection_2d: no centers");
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("ball_intersection_2d: radius must be positive and finite");
    for (const Vec& c : centers) {
        require_dim2(c, "center");
        if (!c.allFinite()) throw std::invalid_argument("ball_intersection_2d: non-finite center");
    }

    double eps = tol.eps();

    // Coincident centers give identical disks, keep the first of each cluster.
    std::vector<Vec> gen;
    gen.reserve(centers.size());
    for (const Vec& c : centers) {
        bool dup = false;
        for (const Vec& g : gen)
            if ((c - g).norm() <= eps) { dup = true; break; }
        if (!dup) gen.push_back(c);
    }

    ArcRegion region;
    region.radius = r;
    region.generators = gen;

    int n = static_cast<int>(gen.size());
    std::vector<ArcSet> arcs;
    arcs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ArcSet a = ArcSet::full(r, tol.ang_eps);
        for (int j = 0; j < n && !a.is_empty(); ++j) {
            if (j == i) continue;
            Vec u = gen[static_cast<std::size_t>(j)] - gen[static_cast<std::size_t>(i)];
            double d = u.norm();
            double t = d / (2.0 * r);
            double phi = wrap_angle(std::atan2(u(1), u(0)));
            if (t <= 1.0) {
                a.intersect_closed_arc(phi, std::acos(t));
            } else if (d <= 2.0 * r + eps) {
                a.intersect_closed_arc(phi, 0.0);  // tangency, single touching point
            } else {
                a.clear();  // disjoint disks empty the whole region
            }
        }
        arcs.push_back(std::move(a));
    }

    bool all_empty = true;
    for (const ArcSet& a : arcs)
        if (!a.is_empty()) all_empty = false;
    // Any point of the region pushed outward hits some generating circle, so
    // for n >= 2 the region is empty exactly when every circle lost all arcs.
    region.empty_flag = (n >= 2) ? all_empty : false;
    if (region.empty_flag) return region;

    struct Piece {
        int gen;
        AngleInterval span;
        Vec mid;
    };
    std::vector<Piece> pieces;
    for (int i = 0; i < n; ++i) {
        for (const AngleInterval& v : arcs[static_cast<std::size_t>(i)].intervals()) {
            double m = 0.5 * (v.lo + v.hi);
            pieces.push_back({i, v, circle_point(gen[static_cast<std::size_t>(i)], r, m)});
        }
    }

    Vec g = Vec::Zero(2);
    for (const Piece& p : pieces) g += p.mid;
    g /= static_cast<double>(pieces.size());

    std::sort(pieces.begin(), pieces.end(), [&](const Piece& x, const Piece& y) {
        double ax = wrap_angle(std::atan2(x.mid(1) - g(1), x.mid(0) - g(0)));
        double ay = wrap_angle(std::atan2(y.mid(1) - g(1), y.mid(0) - g(0)));
        return std::tie(ax, x.gen, x.span.lo) < std::tie(ay, y.gen, y.span.lo);
    });

    region.boundary.reserve(pieces.size());
    for (const Piece& p : pieces) region.boundary.push_back({p.gen, p.span});
    return region;
}

Location region_contains(const ArcRegion& region, const Vec& x, const Tolerance& tol) {
    require_dim2(x, "query point");
    if (region.empty_flag) return Location::outside;
    double dmax = 0.0;
    for (const Vec& c : region.generators) dmax = std::max(dmax, (x - c).norm());
    double eps = tol.eps();
    if (std::abs(dmax - region.radius) <= eps) return Location::boundary;
    return dmax < region.radius ? Location::interior : Location::outside;
}

double region_farthest_distance(const ArcRegion& region, const Vec& x) {
    require_dim2(x, "query point");
    if (region.empty_flag)
        throw std::invalid_argument("region_farthest_distance: empty region");
    double best = -std::numeric_limits<double>::infinity();
    for (const BoundaryArc& arc : region.boundary) {
        const Vec& a = region.generators[static_cast<std::size_t>(arc.generator)];
        Vec u = a - x;
        double d = u.norm();
        if (d <= 1e-15) {
            best = std::max(best, region.radius);  // x at the arc center, whole arc equidistant
            continue;
        }
        double theta = wrap_angle(std::atan2(u(1), u(0)));
        if (span_contains(arc.span, theta)) {
            best = std::max(best, d + region.radius);
        } else {
            best = std::max(best, (x - circle_point(a, region.radius, arc.span.lo)).norm());
            best = std::max(best, (x - circle_point(a, region.radius, arc.span.hi)).norm());
        }
    }
    return best;
}

Location ball_hull_membership(const PointSet& S, double r, const Vec& x, const Tolerance& tol) {
    if (S.dim() != 2) throw std::invalid_argument("ball_hull_membership: 2-d point sets only");
    require_dim2(x, "query point");
    ArcRegion K = ball_intersection_2d(S.points(), r, tol);
    if (K.empty_flag)
        throw std::runtime_error("ball_hull_membership: no ball of this radius contains the set");
    double far = region_farthest_distance(K, x);
    if (std::abs(far - r) <= tol.eps()) return Location::boundary;
    return far < r ? Location::interior : Location::outside;
}

ArcRegion certificate_region(const std::vector<NormalCertificate>& certs, double r,
                             const Tolerance& tol) {
    if (certs.empty()) throw std::invalid_argument("certificate_region: no certificates");
    std::vector<Vec> centers;
    centers.reserve(certs.size());
    for (const NormalCertificate& c : certs) {
        if (c.kind != CertKind::far_realized)
            throw std::invalid_argument("certificate_region: needs far-realized certificates");
        if (std::abs(c.radius - r) > 1e-9 * std::max(1.0, r))
            throw std::invalid_argument("certificate_region: mixed radii");
        require_dim2(c.base_point, "certificate base point");
        centers.push_back(c.base_point - r * c.direction.u);
    }
    return ball_intersection_2d(centers, r, tol);
}

double support_gap(const std::vector<NormalCertificate>& certs, const Vec& x) {
    if (certs.empty()) throw std::invalid_argument("support_gap: no certificates");
    double best = -std::numeric_limits<double>::infinity();
    for (const NormalCertificate& c : certs)
        best = std::max(best, c.direction.u.dot(x - c.base_point));
    return best;
}

}  // namespace spindlekit
