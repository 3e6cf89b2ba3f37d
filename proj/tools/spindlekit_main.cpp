#include "spindlekit/arc_region.hpp"
#include "spindlekit/feasibility.hpp"
#include "spindlekit/geometry.hpp"
#include "spindlekit/io.hpp"
#include "spindlekit/properties.hpp"
#include "spindlekit/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace sk = spindlekit;

namespace {

// 0 success / property holds, 1 property fails or probe outside or threshold
// absent, 2 bad usage or unreadable input, 3 internal failure or oracle
// disagreement.
constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

struct CommonOpts {
    std::string input;
    double tol = 1e-9;
    std::string report_path;
    std::string svg_path;
    bool timings = false;
    std::uint64_t seed = 0;  // reserved for sampled modes, kept in the report
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_svg = true) {
    cmd->add_option("input", opts.input, "input document (.json or .csv)")->required();
    cmd->add_option("--tol", opts.tol, "absolute tolerance before diameter scaling")
        ->default_val(1e-9);
    cmd->add_option("--report", opts.report_path, "write the JSON report here instead of stdout");
    if (with_svg) cmd->add_option("--svg", opts.svg_path, "write an SVG rendering here");
    cmd->add_flag("--timings", opts.timings, "include wall-clock timings in the report");
    cmd->add_option("--seed", opts.seed, "random seed (reserved for sampled modes)")
        ->default_val(0);
}

void emit_report(const sk::Json& report, const CommonOpts& opts) {
    std::string text = sk::dump_report(report);
    if (opts.report_path.empty())
        std::cout << text;
    else
        sk::write_text_file(opts.report_path, text);
}

void emit_svg(const sk::SvgScene& scene, const CommonOpts& opts) {
    if (opts.svg_path.empty()) return;
    sk::write_text_file(opts.svg_path, scene.render());
}

sk::Tolerance shape_tolerance(const sk::ShapeSpec& shape, double abs_eps) {
    double spread = 0.0;
    for (std::size_t i = 0; i < shape.centers.size(); ++i)
        for (std::size_t j = i + 1; j < shape.centers.size(); ++j)
            spread = std::max(spread, (shape.centers[i] - shape.centers[j]).norm());
    sk::Tolerance tol;
    tol.abs_eps = abs_eps;
    tol.rel_scale = std::max(1.0, spread + 2.0 * shape.radius);
    return tol;
}

std::string location_name(sk::Location loc) {
    switch (loc) {
        case sk::Location::interior: return "interior";
        case sk::Location::boundary: return "boundary";
        case sk::Location::outside: return "outside";
    }
    return "";
}

double tick_length(const sk::PointSet& S) { return 0.15 * std::max(1.0, sk::diameter(S)); }

std::vector<sk::NormalCertificate> accepted_certs(const sk::PropertyReport& rep) {
    std::vector<sk::NormalCertificate> certs;
    for (const sk::PointWitness& w : rep.witnesses)
        if (w.accepted && w.certificate) certs.push_back(*w.certificate);
    return certs;
}

int run_check(const CommonOpts& opts, const std::string& property_str,
              std::optional<double> radius, int samples, bool oracle) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::PropertyKind property = sk::parse_property(property_str);
    bool needs_radius = property != sk::PropertyKind::exterior_infty;
    if (needs_radius && !radius)
        throw std::invalid_argument("this property needs --radius");

    if (doc.shape && !doc.points.empty())
        throw std::invalid_argument("give points or a shape, not both");

    if (doc.shape) {
        if (property != sk::PropertyKind::spherical_support)
            throw std::invalid_argument("shape inputs support --property spherical-support only");
        sk::Tolerance tol = shape_tolerance(*doc.shape, opts.tol);
        sk::PropertyReport rep =
            sk::check_shape_support(doc.shape->centers, doc.shape->radius, *radius, samples, tol);
        sk::Json report = sk::report_envelope("check", doc, tol);
        report["seed"] = opts.seed;
        report["check"] = sk::to_json(rep, opts.timings);
        emit_report(report, opts);
        if (!opts.svg_path.empty()) {
            sk::SvgScene scene;
            sk::ArcRegion shape_region =
                sk::ball_intersection_2d(doc.shape->centers, doc.shape->radius, tol);
            sk::add_region(scene, shape_region, tol);
            sk::add_certificates(scene, accepted_certs(rep), 0.15 * tol.rel_scale, false);
            emit_svg(scene, opts);
        }
        return rep.verdict == sk::Verdict::fails ? kFails : kOk;
    }

    sk::PointSet S = sk::to_point_set(doc);
    sk::Tolerance tol = sk::tolerance_for(S, opts.tol);
    if (S.duplicates_merged() > 0)
        std::cerr << "note: merged " << S.duplicates_merged() << " duplicate point(s)\n";

    sk::PropertyReport rep =
        (property == sk::PropertyKind::spherical_support)
            ? sk::check_spherically_supported(S, *radius, tol)
            : (property == sk::PropertyKind::exterior_sphere)
                  ? sk::check_exterior_sphere(S, *radius, tol, samples)
                  : sk::check_exterior_infty(S, tol);
    if (rep.mode == "grid-oracle")
        std::cerr << "warning: 3-d exterior sphere check relies on a direction grid, "
                     "misses are possible\n";

    sk::Json report = sk::report_envelope("check", doc, tol);
    report["seed"] = opts.seed;
    report["check"] = sk::to_json(rep, opts.timings);

    bool oracle_mismatch = false;
    if (oracle) {
        if (S.dim() != 2)
            throw std::invalid_argument("--oracle needs a 2-d point set");
        sk::OracleComparison cmp = sk::compare_grid_oracle(
            S, property, needs_radius ? *radius : 1.0, samples, 1e-3, tol);
        sk::Json oj;
        oj["probes"] = cmp.probes;
        oj["skipped_near_arc_edges"] = cmp.skipped;
        oj["mismatches"] = cmp.mismatches;
        report["oracle"] = std::move(oj);
        oracle_mismatch = cmp.mismatches > 0;
        if (oracle_mismatch)
            std::cerr << "error: grid oracle disagrees with the exact arcs at " << cmp.mismatches
                      << " probe(s)\n";
    }

    emit_report(report, opts);

    if (!opts.svg_path.empty()) {
        sk::SvgScene scene;
        sk::add_point_set(scene, S);
        bool with_balls = property == sk::PropertyKind::spherical_support;
        sk::add_certificates(scene, accepted_certs(rep), tick_length(S), with_balls);
        emit_svg(scene, opts);
    }

    if (oracle_mismatch) return kInternal;
    return rep.verdict == sk::Verdict::fails ? kFails : kOk;
}

int run_certify(const CommonOpts& opts, const std::string& property_str,
                std::optional<double> radius) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::PropertyKind property = sk::parse_property(property_str);
    sk::PointSet S = sk::to_point_set(doc);
    sk::Tolerance tol = sk::tolerance_for(S, opts.tol);
    sk::Json report = sk::report_envelope("certify", doc, tol);

    if (property == sk::PropertyKind::exterior_sphere)
        throw std::invalid_argument("no certifier for exterior-sphere, use check");

    sk::PropertyReport pre = (property == sk::PropertyKind::spherical_support)
                                 ? (radius ? sk::check_spherically_supported(S, *radius, tol)
                                           : throw std::invalid_argument(
                                                 "spherical-support certification needs --radius"))
                                 : sk::check_exterior_infty(S, tol);
    if (pre.verdict == sk::Verdict::fails) {
        report["check"] = sk::to_json(pre, opts.timings);
        emit_report(report, opts);
        std::cerr << "error: property does not hold, nothing to certify\n";
        return kFails;
    }

    sk::CertificateBundle bundle = (property == sk::PropertyKind::spherical_support)
                                       ? sk::certify_ball_envelope(S, *radius, tol)
                                       : sk::certify_support_halfspaces(S, tol);
    report["certify"] = sk::to_json(bundle, tol, opts.timings);
    emit_report(report, opts);

    if (!opts.svg_path.empty()) {
        sk::SvgScene scene;
        sk::add_point_set(scene, S);
        if (bundle.region) sk::add_region(scene, *bundle.region, tol);
        sk::add_certificates(scene, bundle.certificates, tick_length(S), false);
        emit_svg(scene, opts);
    }
    return kOk;
}

int run_hull(const CommonOpts& opts, double radius, const std::vector<double>& probe) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::PointSet S = sk::to_point_set(doc);
    if (S.dim() != 2) throw std::invalid_argument("hull needs a 2-d point set");
    sk::Tolerance tol = sk::tolerance_for(S, opts.tol);
    sk::ArcRegion K = sk::ball_intersection_2d(S.points(), radius, tol);

    sk::Json report = sk::report_envelope("hull", doc, tol);
    report["radius"] = radius;
    report["hull"] = sk::to_json(K, tol);

    int code = K.empty_flag ? kFails : kOk;
    std::optional<sk::Location> loc;
    if (!probe.empty()) {
        sk::Vec x(2);
        x(0) = probe[0];
        x(1) = probe[1];
        if (K.empty_flag) {
            std::cerr << "error: no ball of this radius contains the set\n";
        } else {
            double far = sk::region_farthest_distance(K, x);
            loc = std::abs(far - radius) <= tol.eps()
                      ? sk::Location::boundary
                      : (far < radius ? sk::Location::interior : sk::Location::outside);
            sk::Json pj;
            pj["point"] = sk::Json::array({probe[0], probe[1]});
            pj["farthest_feasible_center_distance"] = far;
            pj["location"] = location_name(*loc);
            report["probe"] = std::move(pj);
            if (*loc == sk::Location::outside) code = kFails;
        }
    }

    emit_report(report, opts);

    if (!opts.svg_path.empty()) {
        sk::SvgScene scene;
        sk::add_point_set(scene, S);
        sk::add_region(scene, K, tol);
        if (!probe.empty()) {
            sk::Vec x(2);
            x(0) = probe[0];
            x(1) = probe[1];
            scene.add_point(x, "probe", loc ? "probe: " + location_name(*loc) : "probe");
        }
        emit_svg(scene, opts);
    }
    return code;
}

int run_prop31(const CommonOpts& opts, double radius, std::vector<double> big_radii) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::PointSet S = sk::to_point_set(doc);
    sk::Tolerance tol = sk::tolerance_for(S, opts.tol);
    sk::PairInequalityReport rep =
        sk::check_pair_inequalities(S, radius, std::move(big_radii), tol);

    // The first two inequality families gate the exit code; the reverse form
    // is reported as a finding only.
    double gate = 1e-8 * std::max(1.0, sk::diameter(S));
    bool holds = rep.max_alignment <= gate && rep.max_separation <= gate;

    sk::Json report = sk::report_envelope("prop31", doc, tol);
    report["prop31"] = sk::to_json(rep, opts.timings);
    report["prop31"]["gate"] = gate;
    report["prop31"]["holds"] = holds;
    emit_report(report, opts);
    return holds ? kOk : kFails;
}

int run_scan(const CommonOpts& opts, const std::string& property_str,
             std::optional<double> r_lo, std::optional<double> r_hi, int steps) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::PropertyKind property = sk::parse_property(property_str);
    sk::PointSet S = sk::to_point_set(doc);
    sk::Tolerance tol = sk::tolerance_for(S, opts.tol);

    double diam = sk::diameter(S);
    double lo = r_lo.value_or(std::max(1e-9, 1e-3 * diam));
    double hi = r_hi.value_or(std::max(1.0, 2.0 * diam));
    std::optional<double> rstar = sk::threshold_scan(S, property, lo, hi, steps, tol);

    sk::Json report = sk::report_envelope("scan", doc, tol);
    sk::Json sj;
    sj["property"] = sk::property_name(property);
    sj["r_lo"] = lo;
    sj["r_hi"] = hi;
    sj["steps"] = steps;
    sj["minimal_radius"] = rstar ? sk::Json(*rstar) : sk::Json(nullptr);
    report["scan"] = std::move(sj);
    emit_report(report, opts);
    return rstar ? kOk : kFails;
}

int run_render(const CommonOpts& opts) {
    sk::InputDocument doc = sk::load_input(opts.input);
    sk::SvgScene scene;
    sk::Tolerance tol;
    tol.abs_eps = opts.tol;

    if (doc.shape) {
        sk::Tolerance stol = shape_tolerance(*doc.shape, opts.tol);
        sk::ArcRegion region =
            sk::ball_intersection_2d(doc.shape->centers, doc.shape->radius, stol);
        sk::add_region(scene, region, stol);
    }
    if (!doc.points.empty()) {
        sk::PointSet S = sk::to_point_set(doc);
        sk::add_point_set(scene, S);
    }
    if (scene.empty()) throw std::invalid_argument("nothing to render");

    std::string text = scene.render();
    if (opts.svg_path.empty())
        std::cout << text;
    else
        sk::write_text_file(opts.svg_path, text);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spindlekit: ball-based convexity checks for finite point sets\n"
                 "Set SPINDLEKIT_THREADS to bound worker threads."};
    app.require_subcommand(1);

    CommonOpts check_opts, certify_opts, hull_opts, prop_opts, scan_opts, render_opts;
    std::string check_property = "spherical-support", certify_property = "spherical-support",
                scan_property = "spherical-support";
    std::optional<double> check_radius, certify_radius, scan_lo, scan_hi;
    double hull_radius = 0.0, prop_radius = 0.0;
    int check_samples = 360, scan_steps = 48;
    bool check_oracle = false;
    std::vector<double> hull_probe, prop_big_radii;

    const std::string property_help =
        "spherical-support | exterior-sphere | exterior-infty";

    CLI::App* check = app.add_subcommand("check", "decide a property and report witnesses");
    add_common(check, check_opts);
    check->add_option("-r,--radius", check_radius, "ball radius");
    check->add_option("--property", check_property, property_help)
        ->default_val("spherical-support");
    check->add_option("--samples", check_samples, "boundary samples / oracle grid size")
        ->default_val(360);
    check->add_flag("--oracle", check_oracle,
                    "cross-check exact arcs against a direction grid (exit 3 on disagreement)");

    CLI::App* certify = app.add_subcommand("certify", "construct certificates for a property");
    add_common(certify, certify_opts);
    certify->add_option("-r,--radius", certify_radius, "ball radius");
    certify->add_option("--property", certify_property, property_help)
        ->default_val("spherical-support");

    CLI::App* hull = app.add_subcommand("hull", "feasible ball centers and hull membership");
    add_common(hull, hull_opts);
    hull->add_option("-r,--radius", hull_radius, "ball radius")->required();
    hull->add_option("--probe", hull_probe, "query point x y")->expected(2);

    CLI::App* prop31 = app.add_subcommand("prop31", "pairwise normal inequality residuals");
    add_common(prop31, prop_opts, /*with_svg=*/false);
    prop31->add_option("-r,--radius", prop_radius, "small ball radius")->required();
    prop31->add_option("--big-radii", prop_big_radii,
                       "big radii list (default: r/2, r, 2r, 10r)")
        ->delimiter(',');

    CLI::App* scan = app.add_subcommand("scan", "bisect for the smallest feasible radius");
    add_common(scan, scan_opts, /*with_svg=*/false);
    scan->add_option("--property", scan_property, property_help)
        ->default_val("spherical-support");
    scan->add_option("--r-lo", scan_lo, "lower end of the scan (default: diameter/1000)");
    scan->add_option("--r-hi", scan_hi, "upper end of the scan (default: 2x diameter)");
    scan->add_option("--steps", scan_steps, "bisection steps")->default_val(48);

    CLI::App* render = app.add_subcommand("render", "draw the input as SVG");
    add_common(render, render_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (check->parsed())
            return run_check(check_opts, check_property, check_radius, check_samples,
                             check_oracle);
        if (certify->parsed()) return run_certify(certify_opts, certify_property, certify_radius);
        if (hull->parsed()) return run_hull(hull_opts, hull_radius, hull_probe);
        if (prop31->parsed()) return run_prop31(prop_opts, prop_radius, prop_big_radii);
        if (scan->parsed()) return run_scan(scan_opts, scan_property, scan_lo, scan_hi, scan_steps);
        if (render->parsed()) return run_render(render_opts);
    } catch (const sk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
