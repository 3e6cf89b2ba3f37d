#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spindlekit/arc_region.hpp"
#include "spindlekit/arcset.hpp"
#include "spindlekit/feasibility.hpp"
#include "spindlekit/geometry.hpp"
#include "spindlekit/properties.hpp"

namespace py = pybind11;
using namespace spindlekit;

namespace {

std::vector<std::pair<double, double>> interval_pairs(const ArcSet& arcs) {
    std::vector<std::pair<double, double>> out;
    for (const AngleInterval& v : arcs.intervals()) out.push_back({v.lo, v.hi});
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ball-based convexity checks for finite point sets";
    m.attr("__version__") = SPINDLEKIT_VERSION;
    m.attr("TAU") = tau;

    py::class_<Tolerance>(m, "Tolerance")
        .def(py::init<>())
        .def_readwrite("abs_eps", &Tolerance::abs_eps)
        .def_readwrite("rel_scale", &Tolerance::rel_scale)
        .def_readwrite("ang_eps", &Tolerance::ang_eps)
        .def("eps", &Tolerance::eps);

    py::class_<PointSet>(m, "PointSet")
        .def(py::init<int, std::vector<Vec>, double, std::vector<std::string>>(), py::arg("dim"),
             py::arg("points"), py::arg("dedup_tolerance") = 1e-9,
             py::arg("labels") = std::vector<std::string>{})
        .def("__len__", &PointSet::size)
        .def("__getitem__",
             [](const PointSet& s, int i) {
                 if (i < 0 || i >= s.size()) throw py::index_error();
                 return s[i];
             })
        .def_property_readonly("dim", &PointSet::dim)
        .def_property_readonly("points", &PointSet::points)
        .def_property_readonly("labels", &PointSet::labels)
        .def_property_readonly("duplicates_merged", &PointSet::duplicates_merged);

    m.def("tolerance_for", &tolerance_for, py::arg("points"), py::arg("abs_eps") = 1e-9,
          py::arg("ang_eps") = 1e-12);
    m.def("diameter", &diameter);
    m.def("distance_to_set", &distance_to_set);
    m.def("farthest_distance", &farthest_distance);

    py::class_<Direction>(m, "Direction")
        .def(py::init<const Vec&>())
        .def_static("from_angle", &Direction::from_angle)
        .def_readonly("u", &Direction::u)
        .def("angle", &Direction::angle);

    py::enum_<CertKind>(m, "CertKind")
        .value("realized", CertKind::realized)
        .value("far_realized", CertKind::far_realized)
        .value("supporting", CertKind::supporting);

    py::enum_<SearchStatus>(m, "SearchStatus")
        .value("accepted", SearchStatus::accepted)
        .value("infeasible", SearchStatus::infeasible)
        .value("iteration_limit", SearchStatus::iteration_limit);

    py::class_<NormalCertificate>(m, "NormalCertificate")
        .def_readonly("base_index", &NormalCertificate::base_index)
        .def_readonly("base_point", &NormalCertificate::base_point)
        .def_property_readonly("direction",
                               [](const NormalCertificate& c) { return c.direction.u; })
        .def_property_readonly("angle",
                               [](const NormalCertificate& c) { return c.direction.angle(); })
        .def_readonly("radius", &NormalCertificate::radius)
        .def_readonly("kind", &NormalCertificate::kind)
        .def_readonly("margin", &NormalCertificate::margin)
        .def_readonly("degenerate_singleton", &NormalCertificate::degenerate_singleton);

    py::class_<DirectionCheck>(m, "DirectionCheck")
        .def_readonly("accepted", &DirectionCheck::accepted)
        .def_readonly("certificate", &DirectionCheck::certificate);

    py::class_<CertificateSearch>(m, "CertificateSearch")
        .def_readonly("status", &CertificateSearch::status)
        .def_readonly("certificate", &CertificateSearch::certificate)
        .def_readonly("optimum", &CertificateSearch::optimum);

    py::class_<ArcSet>(m, "ArcSet")
        .def("is_empty", &ArcSet::is_empty)
        .def("measure", &ArcSet::measure)
        .def("contains", &ArcSet::contains, py::arg("theta"), py::arg("eps") = 1e-12)
        .def("certificate_angles", &ArcSet::certificate_angles)
        .def_property_readonly("intervals", &interval_pairs);

    m.def("is_realized", &is_realized, py::arg("points"), py::arg("base"), py::arg("direction"),
          py::arg("radius"), py::arg("tol"));
    m.def("is_far_realized", &is_far_realized, py::arg("points"), py::arg("base"),
          py::arg("direction"), py::arg("radius"), py::arg("tol"));
    m.def("is_supporting", &is_supporting, py::arg("points"), py::arg("base"),
          py::arg("direction"), py::arg("tol"));
    m.def("far_supported_directions_2d", &far_supported_directions_2d, py::arg("points"),
          py::arg("base"), py::arg("radius"), py::arg("tol"));
    m.def("exterior_sphere_directions_2d", &exterior_sphere_directions_2d, py::arg("points"),
          py::arg("base"), py::arg("radius"), py::arg("tol"));
    m.def("supporting_directions_2d", &supporting_directions_2d, py::arg("points"),
          py::arg("base"), py::arg("tol"));
    m.def("min_norm_far_certificate", &min_norm_far_certificate, py::arg("points"),
          py::arg("base"), py::arg("radius"), py::arg("tol"));
    m.def("supporting_direction_lp", &supporting_direction_lp, py::arg("points"), py::arg("base"),
          py::arg("tol"));

    py::enum_<Location>(m, "Location")
        .value("interior", Location::interior)
        .value("boundary", Location::boundary)
        .value("outside", Location::outside);

    py::class_<BoundaryArc>(m, "BoundaryArc")
        .def_readonly("generator", &BoundaryArc::generator)
        .def_property_readonly("lo", [](const BoundaryArc& a) { return a.span.lo; })
        .def_property_readonly("hi", [](const BoundaryArc& a) { return a.span.hi; });

    py::class_<ArcRegion>(m, "ArcRegion")
        .def_readonly("radius", &ArcRegion::radius)
        .def_readonly("generators", &ArcRegion::generators)
        .def_readonly("boundary", &ArcRegion::boundary)
        .def_readonly("empty", &ArcRegion::empty_flag)
        .def("vertices", &ArcRegion::vertices, py::arg("tol"));

    m.def("ball_intersection_2d", &ball_intersection_2d, py::arg("centers"), py::arg("radius"),
          py::arg("tol"));
    m.def("region_contains", &region_contains, py::arg("region"), py::arg("x"), py::arg("tol"));
    m.def("region_farthest_distance", &region_farthest_distance, py::arg("region"), py::arg("x"));
    m.def("ball_hull_membership", &ball_hull_membership, py::arg("points"), py::arg("radius"),
          py::arg("x"), py::arg("tol"));
    m.def("certificate_region", &certificate_region, py::arg("certificates"), py::arg("radius"),
          py::arg("tol"));
    m.def("support_gap", &support_gap, py::arg("certificates"), py::arg("x"));

    py::enum_<Verdict>(m, "Verdict")
        .value("holds", Verdict::holds)
        .value("fails", Verdict::fails)
        .value("degenerate", Verdict::degenerate);

    py::enum_<PropertyKind>(m, "PropertyKind")
        .value("spherical_support", PropertyKind::spherical_support)
        .value("exterior_sphere", PropertyKind::exterior_sphere)
        .value("exterior_infty", PropertyKind::exterior_infty);

    py::class_<PointWitness>(m, "PointWitness")
        .def_readonly("index", &PointWitness::index)
        .def_readonly("accepted", &PointWitness::accepted)
        .def_readonly("certificate", &PointWitness::certificate)
        .def_readonly("optimum", &PointWitness::optimum)
        .def_readonly("note", &PointWitness::note);

    py::class_<PropertyReport>(m, "PropertyReport")
        .def_readonly("property", &PropertyReport::property)
        .def_readonly("radius", &PropertyReport::radius)
        .def_readonly("verdict", &PropertyReport::verdict)
        .def_readonly("witnesses", &PropertyReport::witnesses)
        .def_readonly("worst_margin", &PropertyReport::worst_margin)
        .def_readonly("mode", &PropertyReport::mode);

    py::class_<CertificateBundle>(m, "CertificateBundle")
        .def_readonly("property", &CertificateBundle::property)
        .def_readonly("radius", &CertificateBundle::radius)
        .def_readonly("certificates", &CertificateBundle::certificates)
        .def_readonly("region", &CertificateBundle::region)
        .def_readonly("residuals", &CertificateBundle::residuals);

    py::class_<PairResidual>(m, "PairResidual")
        .def_readonly("s_index", &PairResidual::s_index)
        .def_readonly("x_index", &PairResidual::x_index)
        .def_readonly("big_radius", &PairResidual::big_radius)
        .def_readonly("alignment", &PairResidual::residual_alignment)
        .def_readonly("separation", &PairResidual::residual_separation)
        .def_readonly("reverse", &PairResidual::residual_reverse);

    py::class_<PairInequalityReport>(m, "PairInequalityReport")
        .def_readonly("radius", &PairInequalityReport::radius)
        .def_readonly("big_radii", &PairInequalityReport::big_radii)
        .def_readonly("rows", &PairInequalityReport::rows)
        .def_readonly("max_alignment", &PairInequalityReport::max_alignment)
        .def_readonly("max_separation", &PairInequalityReport::max_separation)
        .def_readonly("max_reverse", &PairInequalityReport::max_reverse)
        .def_readonly("skipped", &PairInequalityReport::skipped);

    py::class_<OracleComparison>(m, "OracleComparison")
        .def_readonly("probes", &OracleComparison::probes)
        .def_readonly("skipped", &OracleComparison::skipped)
        .def_readonly("mismatches", &OracleComparison::mismatches);

    m.def("check_spherically_supported", &check_spherically_supported, py::arg("points"),
          py::arg("radius"), py::arg("tol"));
    m.def("check_exterior_sphere", &check_exterior_sphere, py::arg("points"), py::arg("radius"),
          py::arg("tol"), py::arg("oracle_samples") = 360);
    m.def("check_exterior_infty", &check_exterior_infty, py::arg("points"), py::arg("tol"));
    m.def("certify_support_halfspaces", &certify_support_halfspaces, py::arg("points"),
          py::arg("tol"));
    m.def("certify_ball_envelope", &certify_ball_envelope, py::arg("points"), py::arg("radius"),
          py::arg("tol"));
    m.def(
        "check_pair_inequalities",
        [](const PointSet& S, double r, const Tolerance& tol, std::vector<double> big_radii) {
            return check_pair_inequalities(S, r, std::move(big_radii), tol);
        },
        py::arg("points"), py::arg("radius"), py::arg("tol"),
        py::arg("big_radii") = std::vector<double>{});
    m.def("check_shape_support", &check_shape_support, py::arg("centers"),
          py::arg("shape_radius"), py::arg("radius"), py::arg("samples"), py::arg("tol"));
    m.def("direction_grid", &direction_grid, py::arg("dim"), py::arg("m"));
    m.def("threshold_scan", &threshold_scan, py::arg("points"), py::arg("property"),
          py::arg("r_lo"), py::arg("r_hi"), py::arg("steps"), py::arg("tol"));
    m.def("compare_grid_oracle", &compare_grid_oracle, py::arg("points"), py::arg("property"),
          py::arg("radius"), py::arg("m"), py::arg("exclusion_band"), py::arg("tol"));
}
