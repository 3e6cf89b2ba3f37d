#pragma once

#include "spindlekit/arc_region.hpp"
#include "spindlekit/certificates.hpp"
#include "spindlekit/feasibility.hpp"
#include "spindlekit/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spindlekit {

enum class Verdict { holds, fails, degenerate };

enum class PropertyKind { spherical_support, exterior_sphere, exterior_infty };

/// CLI spelling of a property ("spherical-support", "exterior-sphere",
/// "exterior-infty") and its inverse. parse throws on unknown names.
std::string property_name(PropertyKind kind);
PropertyKind parse_property(const std::string& name);

/// Outcome at one point of the set (or one boundary sample for shapes).
struct PointWitness {
    int index = -1;
    bool accepted = false;
    std::optional<NormalCertificate> certificate;
    double optimum = 0.0;
    std::string note;
};

struct PropertyReport {
    PropertyKind property = PropertyKind::spherical_support;
    std::optional<double> radius;
    Verdict verdict = Verdict::fails;
    std::vector<PointWitness> witnesses;  // input point order
    double worst_margin = 0.0;            // min certificate margin, +inf when none
    double timing_ms = 0.0;
    std::string mode = "exact";  // "grid-oracle" marks the sampled 3-d fallback
};

struct CertificateBundle {
    PropertyKind property = PropertyKind::spherical_support;
    std::optional<double> radius;
    std::vector<NormalCertificate> certificates;
    std::optional<ArcRegion> region;  // ball envelope only
    std::vector<double> residuals;    // one per input point
    double timing_ms = 0.0;
};

/// Residuals of the three pairwise normal inequalities for one ordered pair
/// (s, x) at one big radius; each is nonpositive when the inequality holds.
struct PairResidual {
    int s_index = 0;
    int x_index = 0;
    double big_radius = 0.0;
    double residual_alignment = 0.0;   // <z_s - z_x, x - s> + (r+R)/(2rR) ||x-s||^2
    double residual_separation = 0.0;  // ||x - s|| - 2rR/(r+R) ||z_s - z_x||
    double residual_reverse = 0.0;     // -<z_s - z_x, x - s> - 2rR/(r+R) ||z_s - z_x||^2
};

struct PairInequalityReport {
    double radius = 0.0;
    std::vector<double> big_radii;
    std::vector<PairResidual> rows;
    double max_alignment = 0.0;
    double max_separation = 0.0;
    double max_reverse = 0.0;
    int skipped = 0;  // (x, R) combinations with no far direction at R
    double timing_ms = 0.0;
};

/// Every point admits a far-realized direction at radius r (min-norm search
/// per point). Singleton sets come back degenerate.
PropertyReport check_spherically_supported(const PointSet& S, double r, const Tolerance& tol);

/// Every point admits a realized direction at radius r. Exact arc arithmetic
/// in 2-d; direction-grid fallback in 3-d (mode "grid-oracle"); higher
/// dimensions are rejected.
PropertyReport check_exterior_sphere(const PointSet& S, double r, const Tolerance& tol,
                                     int oracle_samples = 360);

/// Every point admits a supporting halfspace (two-stage LP per point).
PropertyReport check_exterior_infty(const PointSet& S, const Tolerance& tol);

/// Supporting halfspace certificate per point; residuals are the values of
/// f(s) = max_j <z_j, s - s_j> at each input point, all zero when the
/// halfspace description is consistent. Throws when some point has no
/// supporting direction.
CertificateBundle certify_support_halfspaces(const PointSet& S, const Tolerance& tol);

/// Ball envelope certificate: one far-realized direction per far-arc endpoint
/// and midpoint, inducing disks B(s - r z; r) whose intersection contains the
/// set. Residuals are | max_c ||s - c|| - r | per point. 2-d only; throws when
/// some point has no far direction at r.
CertificateBundle certify_ball_envelope(const PointSet& S, double r, const Tolerance& tol);

/// Pairwise inequality residuals across all ordered pairs and big radii
/// (default big radii: r/2, r, 2r, 10r). Pairs whose x has no far direction
/// at a given R are skipped and counted.
PairInequalityReport check_pair_inequalities(const PointSet& S, double r,
                                             std::vector<double> big_radii, const Tolerance& tol);

/// Boundary of the disk intersection shape sampled proportionally to arc
/// length (largest-remainder rounding, midpoint rule per arc); each sample s
/// gets the outward normal of its arc and is tested as a far-realized
/// direction at radius r over the whole sample set. Empty or single-point
/// shapes are rejected.
PropertyReport check_shape_support(const std::vector<Vec>& shape_centers, double shape_radius,
                                   double r, int samples, const Tolerance& tol);

/// Deterministic direction grid: equal angles on the circle, Fibonacci
/// lattice on the sphere. Higher dimensions are rejected.
std::vector<Vec> direction_grid(int dim, int m);

/// Bisection for the smallest radius at which the property holds, within
/// (r_hi - r_lo) / 2^steps. Empty when even r_hi fails; r_lo when r_lo
/// already holds. Radius-free properties are rejected.
std::optional<double> threshold_scan(const PointSet& S, PropertyKind property, double r_lo,
                                     double r_hi, int steps, const Tolerance& tol);

struct OracleComparison {
    long probes = 0;     // grid directions examined (skipped ones included)
    long skipped = 0;    // probes within the exclusion band of an arc endpoint
    long mismatches = 0;  // predicate and arc disagree outside the band
};

/// Agreement between the exact 2-d arcs and the direct per-direction
/// predicate on an m-point angle grid, per point of S. Probes closer than
/// exclusion_band radians to an arc endpoint are skipped, not judged.
OracleComparison compare_grid_oracle(const PointSet& S, PropertyKind property, double r, int m,
                                     double exclusion_band, const Tolerance& tol);

}  // namespace spindlekit
