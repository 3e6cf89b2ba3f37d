#pragma once

#include "spindlekit/arcset.hpp"
#include "spindlekit/certificates.hpp"
#include "spindlekit/geometry.hpp"

namespace spindlekit {

/// Does the open ball of radius r tangent at s in direction zeta miss S?
/// Inequality form: <zeta, x - s> <= ||x - s||^2 / (2r) for every x in S.
/// margin = worst slack over S \ {s}; accepted iff margin >= -tol.eps().
DirectionCheck is_realized(const PointSet& S, const Vec& s, const Direction& zeta, double r,
                           const Tolerance& tol);

/// Does S fit inside the closed ball of radius r tangent at s opposite zeta
/// (center s - r zeta)? Inequality form: <zeta, x - s> <= -||x - s||^2 / (2r).
DirectionCheck is_far_realized(const PointSet& S, const Vec& s, const Direction& zeta, double r,
                               const Tolerance& tol);

/// Is zeta a supporting direction at s: <zeta, x - s> <= 0 over S?
DirectionCheck is_supporting(const PointSet& S, const Vec& s, const Direction& zeta,
                             const Tolerance& tol);

/// Exact 2D sets of feasible direction angles, as closed arc unions.
/// far: each x != s constrains cos(theta - angle(x-s)) <= -||x-s||/(2r);
/// single closed arc opposite x with half-width acos(||x-s||/(2r)).
ArcSet far_supported_directions_2d(const PointSet& S, const Vec& s, double r,
                                   const Tolerance& tol);

/// realized: complement of the open arcs where the tangent ball would hit
/// some x; tangency stays feasible because the excluded ball is open.
ArcSet exterior_sphere_directions_2d(const PointSet& S, const Vec& s, double r,
                                     const Tolerance& tol);

/// supporting: half-circle constraint per x != s.
ArcSet supporting_directions_2d(const PointSet& S, const Vec& s, const Tolerance& tol);

/// Minimum-norm vector satisfying <z, x-s> <= -||x-s||^2/(2r) for all x. A
/// unit far-realizing direction exists iff the optimum norm is <= 1 (scaling
/// up keeps feasibility: all right-hand sides are negative). The returned
/// certificate is the normalized minimizer re-validated by is_far_realized.
CertificateSearch min_norm_far_certificate(const PointSet& S, const Vec& s, double r,
                                           const Tolerance& tol);

/// Supporting direction via LP: maximize the normalized slack delta subject
/// to <z, (x-s)/||x-s||> <= -delta and ||z||_inf <= 1. delta* > 0 gives a
/// strict certificate; at delta* = 0 a second pass hunts a nonzero z in the
/// polar cone (the degenerate face case).
CertificateSearch supporting_direction_lp(const PointSet& S, const Vec& s, const Tolerance& tol);

}  // namespace spindlekit
