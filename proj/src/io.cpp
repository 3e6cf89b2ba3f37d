#include "spindlekit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace spindlekit {

namespace {

Json finite_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return x;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("invalid input: " + path + ": " + what);
}

double number_at(const Json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "not a number");
    double x = j.get<double>();
    if (!std::isfinite(x)) fail(path, "not a finite number");
    return x;
}

Vec point_at(const Json& j, int dim, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        fail(path, "expected an array of " + std::to_string(dim) + " numbers");
    Vec p(dim);
    for (int k = 0; k < dim; ++k)
        p(k) = number_at(j[static_cast<std::size_t>(k)], path + "[" + std::to_string(k) + "]");
    return p;
}

int infer_dim(const Json& j) {
    if (j.contains("dim")) {
        const Json& d = j["dim"];
        if (!d.is_number_integer() || d.get<int>() < 2) fail(".dim", "must be an integer >= 2");
        return d.get<int>();
    }
    if (j.contains("points") && j["points"].is_array() && !j["points"].empty() &&
        j["points"][0].is_array())
        return static_cast<int>(j["points"][0].size());
    if (j.contains("shape") && j["shape"].is_object() && j["shape"].contains("centers") &&
        j["shape"]["centers"].is_array() && !j["shape"]["centers"].empty() &&
        j["shape"]["centers"][0].is_array())
        return static_cast<int>(j["shape"]["centers"][0].size());
    fail(".dim", "missing and not inferable");
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

}  // namespace

InputDocument parse_input_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid input: not valid JSON: ") + e.what());
    }
    if (!j.is_object()) fail(".", "expected a JSON object");

    InputDocument doc;
    doc.dim = infer_dim(j);

    if (j.contains("points")) {
        const Json& pts = j["points"];
        if (!pts.is_array()) fail(".points", "expected an array");
        for (std::size_t i = 0; i < pts.size(); ++i)
            doc.points.push_back(point_at(pts[i], doc.dim, ".points[" + std::to_string(i) + "]"));
    }

    if (j.contains("labels")) {
        const Json& labels = j["labels"];
        if (!labels.is_array() || labels.size() != doc.points.size())
            fail(".labels", "expected one label per point");
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string())
                fail(".labels[" + std::to_string(i) + "]", "expected a string");
            doc.labels.push_back(labels[i].get<std::string>());
        }
    }

    if (j.contains("shape")) {
        const Json& sh = j["shape"];
        if (!sh.is_object()) fail(".shape", "expected an object");
        ShapeSpec spec;
        if (!sh.contains("centers") || !sh["centers"].is_array() || sh["centers"].empty())
            fail(".shape.centers", "expected a nonempty array");
        for (std::size_t i = 0; i < sh["centers"].size(); ++i)
            spec.centers.push_back(
                point_at(sh["centers"][i], doc.dim, ".shape.centers[" + std::to_string(i) + "]"));
        if (!sh.contains("radius")) fail(".shape.radius", "missing");
        spec.radius = number_at(sh["radius"], ".shape.radius");
        if (!(spec.radius > 0.0)) fail(".shape.radius", "must be positive");
        doc.shape = std::move(spec);
    }

    if (doc.points.empty() && !doc.shape) fail(".points", "no points and no shape");
    return doc;
}

InputDocument parse_input_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError("invalid input: empty CSV");
    ++lineno;
    std::vector<std::string> header = split_csv_line(line);
    int dim = static_cast<int>(header.size());
    if (dim < 2) throw ParseError("invalid input: CSV header needs at least two columns");
    for (int k = 0; k < dim; ++k) {
        std::string want = "x" + std::to_string(k + 1);
        if (header[static_cast<std::size_t>(k)] != want)
            throw ParseError("invalid input: CSV header column " + std::to_string(k + 1) +
                             ": expected \"" + want + "\", got \"" +
                             header[static_cast<std::size_t>(k)] + "\"");
    }

    InputDocument doc;
    doc.dim = dim;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (static_cast<int>(cells.size()) != dim)
            throw ParseError("invalid input: CSV line " + std::to_string(lineno) + ": expected " +
                             std::to_string(dim) + " values, got " +
                             std::to_string(cells.size()));
        Vec p(dim);
        for (int k = 0; k < dim; ++k) {
            const std::string& cell = cells[static_cast<std::size_t>(k)];
            double x = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(x))
                throw ParseError("invalid input: CSV line " + std::to_string(lineno) +
                                 ", column " + std::to_string(k + 1) + ": not a finite number");
            p(k) = x;
        }
        doc.points.push_back(p);
    }
    if (doc.points.empty()) throw ParseError("invalid input: CSV has a header but no points");
    return doc;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

InputDocument load_input(const std::string& path) {
    std::string text = read_text_file(path);
    auto ends_with = [&](const char* suffix) {
        std::string s(suffix);
        return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
    };
    if (ends_with(".json")) return parse_input_json(text);
    if (ends_with(".csv")) return parse_input_csv(text);
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_input_json(text);
    return parse_input_csv(text);
}

PointSet to_point_set(const InputDocument& doc, double dedup_tolerance) {
    if (doc.points.empty()) throw ParseError("invalid input: this command needs points");
    return PointSet(doc.dim, doc.points, dedup_tolerance, doc.labels);
}

Json to_json(const Tolerance& tol) {
    Json j;
    j["abs_eps"] = tol.abs_eps;
    j["rel_scale"] = tol.rel_scale;
    j["ang_eps"] = tol.ang_eps;
    return j;
}

namespace {

Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (int k = 0; k < v.size(); ++k) arr.push_back(finite_or_null(v(k)));
    return arr;
}

std::string kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::realized: return "realized";
        case CertKind::far_realized: return "far-realized";
        case CertKind::supporting: return "supporting";
    }
    return "";
}

}  // namespace

Json to_json(const NormalCertificate& cert) {
    Json j;
    j["base_index"] = cert.base_index;
    j["base_point"] = vec_json(cert.base_point);
    j["direction"] = vec_json(cert.direction.u);
    if (cert.direction.u.size() == 2) j["angle"] = wrap_angle(cert.direction.angle());
    j["radius"] = finite_or_null(cert.radius);
    j["kind"] = kind_name(cert.kind);
    j["margin"] = finite_or_null(cert.margin);
    j["degenerate_singleton"] = cert.degenerate_singleton;
    return j;
}

Json to_json(const PointWitness& w) {
    Json j;
    j["index"] = w.index;
    j["accepted"] = w.accepted;
    j["optimum"] = finite_or_null(w.optimum);
    if (!w.note.empty()) j["note"] = w.note;
    if (w.certificate) j["certificate"] = to_json(*w.certificate);
    return j;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::degenerate: return "degenerate";
    }
    return "";
}

Json to_json(const PropertyReport& rep, bool with_timings) {
    Json j;
    j["property"] = property_name(rep.property);
    if (rep.radius) j["radius"] = *rep.radius;
    j["verdict"] = verdict_name(rep.verdict);
    j["mode"] = rep.mode;
    j["worst_margin"] = finite_or_null(rep.worst_margin);
    Json ws = Json::array();
    for (const PointWitness& w : rep.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = std::move(ws);
    if (with_timings) j["timing_ms"] = rep.timing_ms;
    return j;
}

Json to_json(const ArcRegion& region, const Tolerance& tol) {
    Json j;
    j["radius"] = region.radius;
    j["empty"] = region.empty_flag;
    Json gens = Json::array();
    for (const Vec& g : region.generators) gens.push_back(vec_json(g));
    j["generators"] = std::move(gens);
    Json arcs = Json::array();
    for (const BoundaryArc& arc : region.boundary) {
        Json a;
        a["generator"] = arc.generator;
        a["lo"] = arc.span.lo;
        a["hi"] = arc.span.hi;
        a["length"] = arc.span.length();
        arcs.push_back(std::move(a));
    }
    j["boundary"] = std::move(arcs);
    Json verts = Json::array();
    for (const Vec& v : region.vertices(tol)) verts.push_back(vec_json(v));
    j["vertices"] = std::move(verts);
    return j;
}

Json to_json(const CertificateBundle& bundle, const Tolerance& tol, bool with_timings) {
    Json j;
    j["property"] = property_name(bundle.property);
    if (bundle.radius) j["radius"] = *bundle.radius;
    Json certs = Json::array();
    for (const NormalCertificate& c : bundle.certificates) certs.push_back(to_json(c));
    j["certificates"] = std::move(certs);
    Json res = Json::array();
    for (double x : bundle.residuals) res.push_back(finite_or_null(x));
    j["residuals"] = std::move(res);
    if (bundle.region) j["region"] = to_json(*bundle.region, tol);
    if (with_timings) j["timing_ms"] = bundle.timing_ms;
    return j;
}

Json to_json(const PairInequalityReport& rep, bool with_timings) {
    Json j;
    j["radius"] = rep.radius;
    Json radii = Json::array();
    for (double R : rep.big_radii) radii.push_back(R);
    j["big_radii"] = std::move(radii);
    j["max_alignment"] = finite_or_null(rep.max_alignment);
    j["max_separation"] = finite_or_null(rep.max_separation);
    j["max_reverse"] = finite_or_null(rep.max_reverse);
    j["skipped"] = rep.skipped;
    Json rows = Json::array();
    for (const PairResidual& row : rep.rows) {
        Json r;
        r["s_index"] = row.s_index;
        r["x_index"] = row.x_index;
        r["big_radius"] = row.big_radius;
        r["alignment"] = finite_or_null(row.residual_alignment);
        r["separation"] = finite_or_null(row.residual_separation);
        r["reverse"] = finite_or_null(row.residual_reverse);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    if (with_timings) j["timing_ms"] = rep.timing_ms;
    return j;
}

Json report_envelope(const std::string& command, const InputDocument& doc, const Tolerance& tol) {
    Json j;
    j["schema"] = "spindlekit-report-1";
    j["generator"] = std::string("spindlekit ") + SPINDLEKIT_VERSION;
    j["command"] = command;
    Json input;
    input["dim"] = doc.dim;
    input["points"] = static_cast<int>(doc.points.size());
    input["has_shape"] = doc.shape.has_value();
    j["input"] = std::move(input);
    j["tolerance"] = to_json(tol);
    return j;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace spindlekit
