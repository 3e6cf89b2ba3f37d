#include "spindlekit/properties.hpp"

#include "spindlekit/detail/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

namespace spindlekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(d).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void require_radius(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::invalid_argument("radius must be positive and finite");
}

double worst_margin_of(const std::vector<PointWitness>& ws) {
    double worst = kInf;
    for (const PointWitness& w : ws)
        if (w.certificate) worst = std::min(worst, w.certificate->margin);
    return worst;
}

Verdict settle(const PointSet& S, const std::vector<PointWitness>& ws) {
    if (S.size() == 1) return Verdict::degenerate;
    for (const PointWitness& w : ws)
        if (!w.accepted) return Verdict::fails;
    return Verdict::holds;
}

std::string note_for(SearchStatus st) {
    switch (st) {
        case SearchStatus::accepted: return "";
        case SearchStatus::infeasible: return "infeasible";
        case SearchStatus::iteration_limit: return "iteration limit";
    }
    return "";
}

double circ_dist(double a, double b) {
    double d = std::abs(wrap_angle(a) - wrap_angle(b));
    return std::min(d, tau - d);
}

}  // namespace

std::string property_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::spherical_support: return "spherical-support";
        case PropertyKind::exterior_sphere: return "exterior-sphere";
        case PropertyKind::exterior_infty: return "exterior-infty";
    }
    return "";
}

PropertyKind parse_property(const std::string& name) {
    if (name == "spherical-support") return PropertyKind::spherical_support;
    if (name == "exterior-sphere") return PropertyKind::exterior_sphere;
    if (name == "exterior-infty") return PropertyKind::exterior_infty;
    throw std::invalid_argument("unknown property: " + name);
}

PropertyReport check_spherically_supported(const PointSet& S, double r, const Tolerance& tol) {
    require_radius(r);
    Stopwatch clock;
    PropertyReport rep;
    rep.property = PropertyKind::spherical_support;
    rep.radius = r;
    rep.witnesses.resize(static_cast<std::size_t>(S.size()));

    detail::parallel_for(S.size(), [&](int i) {
        CertificateSearch search = min_norm_far_certificate(S, S[i], r, tol);
        PointWitness& w = rep.witnesses[static_cast<std::size_t>(i)];
        w.index = i;
        w.accepted = (search.status == SearchStatus::accepted);
        w.certificate = search.certificate;
        w.optimum = search.optimum;
        w.note = note_for(search.status);
    });

    rep.verdict = settle(S, rep.witnesses);
    rep.worst_margin = worst_margin_of(rep.witnesses);
    rep.timing_ms = clock.ms();
    return rep;
}

PropertyReport check_exterior_sphere(const PointSet& S, double r, const Tolerance& tol,
                                     int oracle_samples) {
    require_radius(r);
    if (S.dim() > 3)
        throw std::invalid_argument(
            "exterior sphere check: exact arcs in 2-d, grid fallback in 3-d, nothing higher");
    Stopwatch clock;
    PropertyReport rep;
    rep.property = PropertyKind::exterior_sphere;
    rep.radius = r;
    rep.witnesses.resize(static_cast<std::size_t>(S.size()));

    if (S.dim() == 2) {
        detail::parallel_for(S.size(), [&](int i) {
            ArcSet arcs = exterior_sphere_directions_2d(S, S[i], r, tol);
            PointWitness& w = rep.witnesses[static_cast<std::size_t>(i)];
            w.index = i;
            w.accepted = !arcs.is_empty();
            w.optimum = arcs.measure();
            if (w.accepted) {
                double theta = arcs.intervals().front().lo;  // smallest feasible angle
                DirectionCheck chk = is_realized(S, S[i], Direction::from_angle(theta), r, tol);
                w.certificate = chk.certificate;
            } else {
                w.note = "infeasible";
            }
        });
    } else {
        rep.mode = "grid-oracle";
        if (oracle_samples < 1) throw std::invalid_argument("oracle sample count must be positive");
        std::vector<Vec> grid = direction_grid(3, oracle_samples);
        detail::parallel_for(S.size(), [&](int i) {
            PointWitness& w = rep.witnesses[static_cast<std::size_t>(i)];
            w.index = i;
            for (const Vec& g : grid) {
                DirectionCheck chk = is_realized(S, S[i], Direction(g), r, tol);
                if (chk.accepted) {
                    w.accepted = true;
                    w.certificate = chk.certificate;
                    w.optimum = chk.certificate.margin;
                    break;
                }
            }
            if (!w.accepted) w.note = "no realized direction on the grid";
        });
    }

    rep.verdict = settle(S, rep.witnesses);
    rep.worst_margin = worst_margin_of(rep.witnesses);
    rep.timing_ms = clock.ms();
    return rep;
}

PropertyReport check_exterior_infty(const PointSet& S, const Tolerance& tol) {
    Stopwatch clock;
    PropertyReport rep;
    rep.property = PropertyKind::exterior_infty;
    rep.witnesses.resize(static_cast<std::size_t>(S.size()));

    detail::parallel_for(S.size(), [&](int i) {
        CertificateSearch search = supporting_direction_lp(S, S[i], tol);
        PointWitness& w = rep.witnesses[static_cast<std::size_t>(i)];
        w.index = i;
        w.accepted = (search.status == SearchStatus::accepted);
        w.certificate = search.certificate;
        w.optimum = search.optimum;
        w.note = note_for(search.status);
    });

    rep.verdict = settle(S, rep.witnesses);
    rep.worst_margin = worst_margin_of(rep.witnesses);
    rep.timing_ms = clock.ms();
    return rep;
}

CertificateBundle certify_support_halfspaces(const PointSet& S, const Tolerance& tol) {
    Stopwatch clock;
    PropertyReport rep = check_exterior_infty(S, tol);
    for (const PointWitness& w : rep.witnesses)
        if (!w.accepted)
            throw std::runtime_error("no supporting direction at point index " +
                                     std::to_string(w.index));

    CertificateBundle bundle;
    bundle.property = PropertyKind::exterior_infty;
    for (const PointWitness& w : rep.witnesses) bundle.certificates.push_back(*w.certificate);
    bundle.residuals.reserve(static_cast<std::size_t>(S.size()));
    for (int i = 0; i < S.size(); ++i)
        bundle.residuals.push_back(support_gap(bundle.certificates, S[i]));
    bundle.timing_ms = clock.ms();
    return bundle;
}

CertificateBundle certify_ball_envelope(const PointSet& S, double r, const Tolerance& tol) {
    require_radius(r);
    if (S.dim() != 2)
        throw std::invalid_argument("ball envelope certification handles 2-d sets only");
    Stopwatch clock;

    CertificateBundle bundle;
    bundle.property = PropertyKind::spherical_support;
    bundle.radius = r;
    for (int i = 0; i < S.size(); ++i) {
        ArcSet arcs = far_supported_directions_2d(S, S[i], r, tol);
        if (arcs.is_empty())
            throw std::runtime_error("no far-realized direction at point index " +
                                     std::to_string(i));
        for (double theta : arcs.certificate_angles()) {
            DirectionCheck chk = is_far_realized(S, S[i], Direction::from_angle(theta), r, tol);
            bundle.certificates.push_back(chk.certificate);
        }
    }

    bundle.region = certificate_region(bundle.certificates, r, tol);
    if (bundle.region->empty_flag)
        throw std::runtime_error("certificate disks have empty intersection");

    bundle.residuals.reserve(static_cast<std::size_t>(S.size()));
    for (int i = 0; i < S.size(); ++i) {
        double dmax = 0.0;
        for (const Vec& c : bundle.region->generators)
            dmax = std::max(dmax, (S[i] - c).norm());
        bundle.residuals.push_back(std::abs(dmax - r));
    }
    bundle.timing_ms = clock.ms();
    return bundle;
}

PairInequalityReport check_pair_inequalities(const PointSet& S, double r,
                                             std::vector<double> big_radii,
                                             const Tolerance& tol) {
    require_radius(r);
    if (big_radii.empty()) big_radii = {0.5 * r, r, 2.0 * r, 10.0 * r};
    for (double R : big_radii) require_radius(R);

    Stopwatch clock;
    PairInequalityReport rep;
    rep.radius = r;
    rep.big_radii = big_radii;
    rep.max_alignment = -kInf;
    rep.max_separation = -kInf;
    rep.max_reverse = -kInf;

    int n = S.size();
    std::vector<Vec> zeta_s(static_cast<std::size_t>(n));
    std::vector<SearchStatus> status_s(static_cast<std::size_t>(n));
    detail::parallel_for(n, [&](int i) {
        CertificateSearch search = min_norm_far_certificate(S, S[i], r, tol);
        status_s[static_cast<std::size_t>(i)] = search.status;
        if (search.status == SearchStatus::accepted)
            zeta_s[static_cast<std::size_t>(i)] = search.certificate->direction.u;
    });
    for (int i = 0; i < n; ++i)
        if (status_s[static_cast<std::size_t>(i)] != SearchStatus::accepted)
            throw std::invalid_argument("pair inequalities need a far direction at every point; "
                                        "none at point index " + std::to_string(i));

    // One normal per (point, big radius); reuse the base radius pass when R == r.
    std::map<double, std::vector<std::optional<Vec>>> zeta_R;
    for (double R : big_radii) {
        if (zeta_R.count(R)) continue;
        std::vector<std::optional<Vec>>& out = zeta_R[R];
        out.resize(static_cast<std::size_t>(n));
        if (R == r) {
            for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = zeta_s[static_cast<std::size_t>(i)];
            continue;
        }
        detail::parallel_for(n, [&](int i) {
            CertificateSearch search = min_norm_far_certificate(S, S[i], R, tol);
            if (search.status == SearchStatus::accepted)
                out[static_cast<std::size_t>(i)] = search.certificate->direction.u;
        });
    }

    for (int si = 0; si < n; ++si) {
        for (int xi = 0; xi < n; ++xi) {
            if (xi == si) continue;
            Vec u = S[xi] - S[si];
            double d2 = u.squaredNorm();
            for (double R : big_radii) {
                const std::optional<Vec>& zx = zeta_R[R][static_cast<std::size_t>(xi)];
                if (!zx) {
                    ++rep.skipped;
                    continue;
                }
                double kappa = (r + R) / (2.0 * r * R);
                double c = 2.0 * r * R / (r + R);
                Vec e = zeta_s[static_cast<std::size_t>(si)] - *zx;
                double eu = e.dot(u);
                PairResidual row;
                row.s_index = si;
                row.x_index = xi;
                row.big_radius = R;
                row.residual_alignment = eu + kappa * d2;
                row.residual_separation = std::sqrt(d2) - c * e.norm();
                row.residual_reverse = -eu - c * e.squaredNorm();
                rep.max_alignment = std::max(rep.max_alignment, row.residual_alignment);
                rep.max_separation = std::max(rep.max_separation, row.residual_separation);
                rep.max_reverse = std::max(rep.max_reverse, row.residual_reverse);
                rep.rows.push_back(row);
            }
        }
    }
    rep.timing_ms = clock.ms();
    return rep;
}

PropertyReport check_shape_support(const std::vector<Vec>& shape_centers, double shape_radius,
                                   double r, int samples, const Tolerance& tol) {
    require_radius(shape_radius);
    require_radius(r);
    if (samples < 1) throw std::invalid_argument("sample count must be positive");

    Stopwatch clock;
    ArcRegion shape = ball_intersection_2d(shape_centers, shape_radius, tol);
    if (shape.empty_flag) throw std::invalid_argument("shape region is empty");

    double total = 0.0;
    for (const BoundaryArc& arc : shape.boundary) total += arc.span.length();
    if (total <= tol.ang_eps * static_cast<double>(shape.boundary.size() + 1))
        throw std::invalid_argument("shape region is a single point, nothing to sample");

    // Largest-remainder split of the sample budget across arcs.
    std::size_t narcs = shape.boundary.size();
    std::vector<int> alloc(narcs, 0);
    std::vector<std::pair<double, std::size_t>> rem;
    int used = 0;
    for (std::size_t k = 0; k < narcs; ++k) {
        double quota = static_cast<double>(samples) * shape.boundary[k].span.length() / total;
        alloc[k] = static_cast<int>(std::floor(quota));
        used += alloc[k];
        rem.push_back({quota - std::floor(quota), k});
    }
    std::sort(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (int extra = samples - used, j = 0; extra > 0; --extra, ++j)
        alloc[rem[static_cast<std::size_t>(j)].second] += 1;

    std::vector<Vec> pts;
    std::vector<double> normals;
    for (std::size_t k = 0; k < narcs; ++k) {
        const BoundaryArc& arc = shape.boundary[k];
        const Vec& a = shape.generators[static_cast<std::size_t>(arc.generator)];
        double len = arc.span.length();
        for (int j = 0; j < alloc[k]; ++j) {
            double theta = arc.span.lo + (static_cast<double>(j) + 0.5) * len /
                                             static_cast<double>(alloc[k]);
            Vec p(2);
            p(0) = a(0) + shape_radius * std::cos(theta);
            p(1) = a(1) + shape_radius * std::sin(theta);
            pts.push_back(p);
            normals.push_back(theta);
        }
    }
    if (pts.empty()) throw std::invalid_argument("no boundary samples produced");

    PointSet probe(2, pts);
    Tolerance ptol = tolerance_for(probe, tol.abs_eps, tol.ang_eps);

    PropertyReport rep;
    rep.property = PropertyKind::spherical_support;
    rep.radius = r;
    rep.mode = "boundary-samples";
    rep.witnesses.resize(pts.size());
    detail::parallel_for(static_cast<int>(pts.size()), [&](int i) {
        std::size_t k = static_cast<std::size_t>(i);
        DirectionCheck chk =
            is_far_realized(probe, pts[k], Direction::from_angle(normals[k]), r, ptol);
        PointWitness& w = rep.witnesses[k];
        w.index = i;
        w.accepted = chk.accepted;
        w.certificate = chk.certificate;
        w.optimum = chk.certificate.margin;
        if (!chk.accepted) w.note = "far inequality violated at this sample";
    });

    rep.verdict = Verdict::holds;
    for (const PointWitness& w : rep.witnesses)
        if (!w.accepted) rep.verdict = Verdict::fails;
    rep.worst_margin = worst_margin_of(rep.witnesses);
    rep.timing_ms = clock.ms();
    return rep;
}

std::vector<Vec> direction_grid(int dim, int m) {
    if (m < 1) throw std::invalid_argument("direction grid needs at least one sample");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(m));
    if (dim == 2) {
        for (int k = 0; k < m; ++k) {
            double theta = static_cast<double>(k) * tau / static_cast<double>(m);
            Vec v(2);
            v(0) = std::cos(theta);
            v(1) = std::sin(theta);
            out.push_back(v);
        }
    } else if (dim == 3) {
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < m; ++k) {
            double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
            double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
            double phi = static_cast<double>(k) * golden;
            Vec v(3);
            v(0) = rad * std::cos(phi);
            v(1) = rad * std::sin(phi);
            v(2) = z;
            out.push_back(v);
        }
    } else {
        throw std::invalid_argument("direction grids cover dimensions 2 and 3 only");
    }
    return out;
}

std::optional<double> threshold_scan(const PointSet& S, PropertyKind property, double r_lo,
                                     double r_hi, int steps, const Tolerance& tol) {
    if (property == PropertyKind::exterior_infty)
        throw std::invalid_argument("threshold scan needs a radius-dependent property");
    require_radius(r_lo);
    require_radius(r_hi);
    if (r_hi < r_lo) throw std::invalid_argument("scan range is inverted");
    if (steps < 1 || steps > 10000) throw std::invalid_argument("scan step count out of range");

    auto holds = [&](double rr) {
        PropertyReport rep = (property == PropertyKind::spherical_support)
                                 ? check_spherically_supported(S, rr, tol)
                                 : check_exterior_sphere(S, rr, tol);
        return rep.verdict != Verdict::fails;
    };

    if (!holds(r_hi)) return std::nullopt;
    if (holds(r_lo)) return r_lo;
    double lo = r_lo, hi = r_hi;
    for (int k = 0; k < steps; ++k) {
        double mid = 0.5 * (lo + hi);
        if (holds(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

OracleComparison compare_grid_oracle(const PointSet& S, PropertyKind property, double r, int m,
                                     double exclusion_band, const Tolerance& tol) {
    if (S.dim() != 2) throw std::invalid_argument("grid oracle comparison is 2-d only");
    if (m < 1) throw std::invalid_argument("grid oracle needs at least one probe");
    if (property != PropertyKind::exterior_infty) require_radius(r);

    OracleComparison cmp;
    for (int i = 0; i < S.size(); ++i) {
        const Vec& s = S[i];
        ArcSet arcs = (property == PropertyKind::spherical_support)
                          ? far_supported_directions_2d(S, s, r, tol)
                          : (property == PropertyKind::exterior_sphere)
                                ? exterior_sphere_directions_2d(S, s, r, tol)
                                : supporting_directions_2d(S, s, tol);

        std::vector<double> endpoints;
        for (const AngleInterval& v : arcs.intervals()) {
            if (v.length() >= tau - tol.ang_eps) continue;  // full circle, no real endpoints
            endpoints.push_back(v.lo);
            endpoints.push_back(v.hi);
        }

        for (int k = 0; k < m; ++k) {
            double theta = static_cast<double>(k) * tau / static_cast<double>(m);
            ++cmp.probes;
            bool near_edge = false;
            for (double e : endpoints)
                if (circ_dist(theta, e) <= exclusion_band) { near_edge = true; break; }
            if (near_edge) {
                ++cmp.skipped;
                continue;
            }
            Direction dir = Direction::from_angle(theta);
            bool pred = (property == PropertyKind::spherical_support)
                            ? is_far_realized(S, s, dir, r, tol).accepted
                            : (property == PropertyKind::exterior_sphere)
                                  ? is_realized(S, s, dir, r, tol).accepted
                                  : is_supporting(S, s, dir, tol).accepted;
            bool in_arc = arcs.contains(theta, tol.ang_eps);
            if (pred != in_arc) ++cmp.mismatches;
        }
    }
    return cmp;
}

}  // namespace spindlekit
