#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace spindlekit {

inline constexpr double tau = 2.0 * std::numbers::pi;

/// Angle folded into [0, tau).
inline double wrap_angle(double a) {
    double w = std::fmod(a, tau);
    if (w < 0.0) w += tau;
    if (w >= tau) w = 0.0;
    return w;
}

struct AngleInterval {
    double lo = 0.0;
    double hi = 0.0;  // 0 <= lo <= hi <= tau
    double length() const { return hi - lo; }
};

/// Union of closed angular intervals on the unit circle. Intervals are kept
/// sorted and disjoint; arcs crossing 0 are stored split at the seam; touching
/// intervals merge within ang_eps. Built by starting from the full circle (or
/// nothing) and intersecting with closed arcs.
class ArcSet {
public:
    static ArcSet full(double radius_context, double ang_eps = 1e-12);
    static ArcSet none(double radius_context, double ang_eps = 1e-12);

    /// Intersect with the closed arc [center - half_width, center + half_width].
    /// half_width >= pi is vacuous; negative half_width clears the set.
    /// An intersection missing by at most ang_eps is kept as a point interval,
    /// so chains of tangent constraints do not lose their common direction to
    /// rounding.
    void intersect_closed_arc(double center, double half_width);

    void clear() { iv_.clear(); }
    bool is_empty() const { return iv_.empty(); }
    double measure() const;
    bool contains(double theta, double eps) const;
    /// True when every interval of inner lies inside this set dilated by eps.
    bool covers(const ArcSet& inner, double eps) const;
    /// Endpoints plus midpoint of each interval (single angle for point
    /// intervals), deduplicated; the canonical finite sample of the set.
    std::vector<double> certificate_angles() const;

    const std::vector<AngleInterval>& intervals() const { return iv_; }
    double radius_context() const { return radius_ctx_; }
    double ang_eps() const { return aeps_; }

private:
    ArcSet(double radius_context, double ang_eps) : radius_ctx_(radius_context), aeps_(ang_eps) {}
    void normalize();

    std::vector<AngleInterval> iv_;
    double radius_ctx_;
    double aeps_;
};

}  // namespace spindlekit
