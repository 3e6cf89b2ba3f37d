#pragma once

#include "spindlekit/geometry.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace spindlekit {

/// Unit vector; normalized at construction so the invariant cannot drift.
struct Direction {
    Vec u;

    explicit Direction(const Vec& v) {
        double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            throw std::invalid_argument("Direction: zero or non-finite vector");
        u = v / n;
    }

    static Direction from_angle(double theta) {
        Vec v(2);
        v << std::cos(theta), std::sin(theta);
        return Direction(v);
    }

    /// Angle in [0, 2pi), 2D only.
    double angle() const;
};

enum class CertKind { realized, far_realized, supporting };

/// Witness that a direction satisfies the defining inequality of its kind at
/// base_point over the whole set, with the worst-case slack as margin.
/// Margin excludes the base point itself (always zero there); a singleton set
/// yields margin +inf with degenerate_singleton set.
struct NormalCertificate {
    int base_index = -1;
    Vec base_point;
    Direction direction;
    double radius = 0.0;  // +inf for supporting certificates
    CertKind kind = CertKind::realized;
    double margin = 0.0;
    bool degenerate_singleton = false;
};

struct DirectionCheck {
    bool accepted = false;
    NormalCertificate certificate;
};

enum class SearchStatus { accepted, infeasible, iteration_limit };

struct CertificateSearch {
    SearchStatus status = SearchStatus::infeasible;
    std::optional<NormalCertificate> certificate;
    /// QP searches: norm of the unnormalized minimizer (feasible iff <= 1).
    /// LP searches: best normalized support slack found.
    double optimum = 0.0;
};

}  // namespace spindlekit
