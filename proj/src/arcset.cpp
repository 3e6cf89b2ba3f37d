#include "spindlekit/arcset.hpp"

#include <algorithm>
#include <cmath>

namespace spindlekit {

ArcSet ArcSet::full(double radius_context, double ang_eps) {
    ArcSet a(radius_context, ang_eps);
    a.iv_.push_back({0.0, tau});
    return a;
}

ArcSet ArcSet::none(double radius_context, double ang_eps) {
    return ArcSet(radius_context, ang_eps);
}

void ArcSet::intersect_closed_arc(double center, double half_width) {
    if (iv_.empty()) return;
    if (half_width >= std::numbers::pi) return;
    if (half_width < 0.0) {
        iv_.clear();
        return;
    }

    // Constraint as one or two intervals inside [0, tau].
    double lo = center - half_width;
    double hi = center + half_width;
    double shift = std::floor(lo / tau) * tau;
    lo -= shift;
    hi -= shift;
    if (lo < 0.0) lo = 0.0;
    AngleInterval cons[2];
    int ncons = 1;
    if (hi <= tau) {
        cons[0] = {lo, hi};
    } else {
        cons[0] = {lo, tau};
        cons[1] = {0.0, std::min(hi - tau, lo)};
        ncons = 2;
    }

    std::vector<AngleInterval> out;
    out.reserve(iv_.size() + 2);
    for (const AngleInterval& old : iv_) {
        for (int c = 0; c < ncons; ++c) {
            // The seam identifies 0 with tau, so a constraint piece may touch
            // an interval through a full turn in either direction.
            for (double k : {-tau, 0.0, tau}) {
                double a = std::max(old.lo, cons[c].lo + k);
                double b = std::min(old.hi, cons[c].hi + k);
                if (b >= a) {
                    out.push_back({a, b});
                } else if (b >= a - aeps_) {
                    double m = std::clamp(0.5 * (a + b), old.lo, old.hi);
                    out.push_back({m, m});
                }
            }
        }
    }
    iv_ = std::move(out);
    normalize();
}

void ArcSet::normalize() {
    if (iv_.empty()) return;
    for (AngleInterval& v : iv_) {
        // A pure seam point sits at angle 0 canonically.
        if (v.hi - v.lo <= aeps_ && v.lo >= tau - aeps_) v = {0.0, 0.0};
    }
    std::sort(iv_.begin(), iv_.end(),
              [](const AngleInterval& a, const AngleInterval& b) { return a.lo < b.lo; });
    std::vector<AngleInterval> merged;
    merged.push_back(iv_.front());
    for (std::size_t i = 1; i < iv_.size(); ++i) {
        AngleInterval& cur = merged.back();
        if (iv_[i].lo - cur.hi <= aeps_) {
            cur.hi = std::max(cur.hi, iv_[i].hi);
        } else {
            merged.push_back(iv_[i]);
        }
    }
    // A degenerate piece at the seam duplicates the far end of a piece that
    // closes the turn; drop the duplicate representation.
    if (merged.size() > 1) {
        const AngleInterval& first = merged.front();
        const AngleInterval& last = merged.back();
        if (first.hi - first.lo <= aeps_ && first.lo <= aeps_ && last.hi >= tau - aeps_) {
            merged.erase(merged.begin());
        } else if (last.hi - last.lo <= aeps_ && last.hi >= tau - aeps_ && first.lo <= aeps_) {
            merged.pop_back();
        }
    }
    iv_ = std::move(merged);
}

double ArcSet::measure() const {
    double m = 0.0;
    for (const AngleInterval& v : iv_) m += v.length();
    return m;
}

bool ArcSet::contains(double theta, double eps) const {
    double t = wrap_angle(theta);
    for (const AngleInterval& v : iv_) {
        for (double k : {-tau, 0.0, tau}) {
            double q = t + k;
            if (q >= v.lo - eps && q <= v.hi + eps) return true;
        }
    }
    return false;
}

bool ArcSet::covers(const ArcSet& inner, double eps) const {
    if (inner.iv_.empty()) return true;
    if (iv_.empty()) return false;
    // Unroll a turn in both directions and merge through the seam, then each
    // inner interval must fit inside one unrolled interval.
    std::vector<AngleInterval> un;
    un.reserve(iv_.size() * 3);
    for (double k : {-tau, 0.0, tau})
        for (const AngleInterval& v : iv_) un.push_back({v.lo + k, v.hi + k});
    std::sort(un.begin(), un.end(),
              [](const AngleInterval& a, const AngleInterval& b) { return a.lo < b.lo; });
    std::vector<AngleInterval> merged;
    merged.push_back(un.front());
    for (std::size_t i = 1; i < un.size(); ++i) {
        if (un[i].lo - merged.back().hi <= eps)
            merged.back().hi = std::max(merged.back().hi, un[i].hi);
        else
            merged.push_back(un[i]);
    }
    for (const AngleInterval& v : inner.iv_) {
        bool ok = false;
        for (const AngleInterval& m : merged) {
            if (m.lo <= v.lo + eps && v.hi <= m.hi + eps) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::vector<double> ArcSet::certificate_angles() const {
    std::vector<double> out;
    for (const AngleInterval& v : iv_) {
        if (v.length() <= aeps_) {
            out.push_back(v.lo);
            continue;
        }
        out.push_back(v.lo);
        out.push_back(0.5 * (v.lo + v.hi));
        bool full_turn = v.lo <= aeps_ && v.hi >= tau - aeps_;
        if (!full_turn) out.push_back(wrap_angle(v.hi));
    }
    // Dedup values that coincide on the circle.
    std::vector<double> uniq;
    for (double a : out) {
        bool dup = false;
        for (double b : uniq) {
            double d = std::fabs(wrap_angle(a) - wrap_angle(b));
            if (d <= aeps_ || tau - d <= aeps_) {
                dup = true;
                break;
            }
        }
        if (!dup) uniq.push_back(a);
    }
    return uniq;
}

}  // namespace spindlekit
