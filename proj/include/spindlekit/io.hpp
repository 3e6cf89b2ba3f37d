#pragma once

#include "spindlekit/arc_region.hpp"
#include "spindlekit/geometry.hpp"
#include "spindlekit/properties.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spindlekit {

using Json = nlohmann::ordered_json;

/// Raised for unreadable files, malformed JSON/CSV, and schema violations;
/// the message carries a dotted path into the offending document.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ShapeSpec {
    std::vector<Vec> centers;
    double radius = 0.0;
};

/// Parsed input: a point list, or a disk-intersection shape, or both pieces
/// of metadata (labels ride along with points).
struct InputDocument {
    int dim = 2;
    std::vector<Vec> points;
    std::optional<ShapeSpec> shape;
    std::vector<std::string> labels;
};

InputDocument parse_input_json(const std::string& text);
InputDocument parse_input_csv(const std::string& text);

/// Reads the file and dispatches on extension (.json / .csv); anything else
/// is sniffed by its first non-space byte.
InputDocument load_input(const std::string& path);

PointSet to_point_set(const InputDocument& doc, double dedup_tolerance = 1e-9);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Report fragments. Non-finite numbers become JSON null; angles are radians
/// in [0, 2pi).
Json to_json(const Tolerance& tol);
Json to_json(const NormalCertificate& cert);
Json to_json(const PointWitness& w);
Json to_json(const PropertyReport& rep, bool with_timings);
Json to_json(const ArcRegion& region, const Tolerance& tol);
Json to_json(const CertificateBundle& bundle, const Tolerance& tol, bool with_timings);
Json to_json(const PairInequalityReport& rep, bool with_timings);

std::string verdict_name(Verdict v);

/// Report envelope shared by every subcommand, ready for command-specific
/// sections.
Json report_envelope(const std::string& command, const InputDocument& doc, const Tolerance& tol);

/// Canonical serialization: two-space indent plus trailing newline, so equal
/// documents are byte-identical.
std::string dump_report(const Json& report);

}  // namespace spindlekit
