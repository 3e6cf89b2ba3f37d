#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>

#include "spindlekit/io.hpp"
#include "spindlekit/properties.hpp"

using namespace spindlekit;

namespace {
Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

std::string parse_error_of(const std::string& text, bool csv = false) {
    try {
        if (csv)
            parse_input_csv(text);
        else
            parse_input_json(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("json input round trip") {
    auto doc = parse_input_json(R"({
        "dim": 2,
        "points": [[1, 1], [1, -1], [-1, 1], [-1, -1]],
        "labels": ["ne", "se", "nw", "sw"]
    })");
    CHECK(doc.dim == 2);
    REQUIRE(doc.points.size() == 4);
    CHECK(doc.points[1](1) == -1.0);
    REQUIRE(doc.labels.size() == 4);
    CHECK(doc.labels[3] == "sw");
    CHECK(!doc.shape.has_value());

    auto S = to_point_set(doc);
    CHECK(S.size() == 4);
    CHECK(S.dim() == 2);
}

TEST_CASE("json dim is inferred from the first point or shape") {
    auto doc = parse_input_json(R"({"points": [[1, 2, 3]]})");
    CHECK(doc.dim == 3);

    auto shaped = parse_input_json(R"({"shape": {"centers": [[0, 0]], "radius": 1.5}})");
    CHECK(shaped.dim == 2);
    REQUIRE(shaped.shape.has_value());
    CHECK(shaped.shape->radius == 1.5);
    REQUIRE(shaped.shape->centers.size() == 1);
    CHECK(shaped.points.empty());
    CHECK_THROWS_AS(to_point_set(shaped), ParseError);
}

TEST_CASE("json shape and points can ride together") {
    auto doc = parse_input_json(
        R"({"points": [[0, 0]], "shape": {"centers": [[0, 0], [1, 0]], "radius": 1}})");
    CHECK(doc.points.size() == 1);
    REQUIRE(doc.shape.has_value());
    CHECK(doc.shape->centers.size() == 2);
}

TEST_CASE("json parse errors carry the dotted path") {
    CHECK(parse_error_of(R"({"points": [[1, "x"]]})").find(".points[0][1]") !=
          std::string::npos);
    CHECK(parse_error_of(R"({"points": [[1, 2], [3]]})").find(".points[1]") !=
          std::string::npos);
    CHECK(parse_error_of(R"({"dim": 1, "points": [[1]]})").find(".dim") != std::string::npos);
    CHECK(parse_error_of(R"({"points": [[1, 2]], "labels": ["a", "b"]})").find(".labels") !=
          std::string::npos);
    CHECK(parse_error_of(R"({"shape": {"centers": [[0, 0]], "radius": -1}})")
              .find(".shape.radius") != std::string::npos);
    CHECK(parse_error_of(R"({"dim": 2})").find(".points") != std::string::npos);
    CHECK(parse_error_of("[1, 2]").find("expected a JSON object") != std::string::npos);
    CHECK(parse_error_of("{oops").find("not valid JSON") != std::string::npos);
    CHECK_THROWS_AS(parse_input_json(R"({"points": [[1e999, 0]]})"), ParseError);
}

TEST_CASE("csv input with the strict header") {
    auto doc = parse_input_csv("x1,x2\n1,1\n1,-1\n-1,1\n-1,-1\n");
    CHECK(doc.dim == 2);
    REQUIRE(doc.points.size() == 4);
    CHECK(doc.points[0](0) == 1.0);
    CHECK(doc.points[3](1) == -1.0);

    auto doc3 = parse_input_csv("x1,x2,x3\n0.5, -2, 3e-1\n");
    CHECK(doc3.dim == 3);
    CHECK(doc3.points[0](2) == 0.3);
}

TEST_CASE("csv parse errors name line and column") {
    CHECK(parse_error_of("", true).find("empty CSV") != std::string::npos);
    CHECK(parse_error_of("x1\n1\n", true).find("two columns") != std::string::npos);
    CHECK(parse_error_of("a,b\n1,2\n", true).find("header column 1") != std::string::npos);
    CHECK(parse_error_of("x1,x2\n1\n", true).find("line 2") != std::string::npos);
    CHECK(parse_error_of("x1,x2\n1,2\n3,zebra\n", true).find("line 3, column 2") !=
          std::string::npos);
    CHECK(parse_error_of("x1,x2\n", true).find("no points") != std::string::npos);
}

TEST_CASE("duplicate points merge through to_point_set") {
    auto doc = parse_input_json(R"({"points": [[0, 0], [0, 0], [1, 0]]})");
    auto S = to_point_set(doc);
    CHECK(S.size() == 2);
    CHECK(S.duplicates_merged() == 1);
}

TEST_CASE("report serialization is deterministic") {
    Json j;
    j["zebra"] = 1;
    j["apple"] = Json::array({1.5, 2.5});
    std::string once = dump_report(j);
    std::string twice = dump_report(j);
    CHECK(once == twice);
    CHECK(once.back() == '\n');
    // ordered_json keeps insertion order, so re-parsing reproduces the bytes
    Json back = Json::parse(once);
    CHECK(dump_report(back) == once);
    CHECK(once.find("\"zebra\"") < once.find("\"apple\""));
}

TEST_CASE("non-finite values serialize as null") {
    PointSet S(2, {v2(3, 4)});
    auto tol = tolerance_for(S);
    auto rep = check_spherically_supported(S, 1.0, tol);
    Json j = to_json(rep, false);
    CHECK(j["worst_margin"].is_null());
    CHECK(j["verdict"] == "degenerate");
    CHECK(!j.contains("timing_ms"));
    Json timed = to_json(rep, true);
    CHECK(timed.contains("timing_ms"));
}

TEST_CASE("certificate json carries the 2d angle") {
    NormalCertificate cert{2,   v2(1, 0), Direction(v2(0, 1)), 1.5, CertKind::far_realized,
                           0.25, false};
    Json j = to_json(cert);
    CHECK(j["base_index"] == 2);
    CHECK(j["kind"] == "far-realized");
    CHECK(j["radius"] == 1.5);
    CHECK(j["margin"] == 0.25);
    CHECK(j["direction"].size() == 2);
    CHECK(std::fabs(j["angle"].get<double>() - std::numbers::pi / 2) <= 1e-14);

    NormalCertificate sup{0, v2(0, 0), Direction(v2(1, 0)),
                          std::numeric_limits<double>::infinity(), CertKind::supporting, 0.0,
                          false};
    Json js = to_json(sup);
    CHECK(js["radius"].is_null());
    CHECK(js["kind"] == "supporting");
}

TEST_CASE("report envelope names schema, command and input shape") {
    auto doc = parse_input_json(R"({"points": [[0, 0], [2, 0]]})");
    auto tol = tolerance_for(to_point_set(doc));
    Json env = report_envelope("check", doc, tol);
    CHECK(env["schema"] == "spindlekit-report-1");
    CHECK(env["command"] == "check");
    CHECK(env["input"]["dim"] == 2);
    CHECK(env["input"]["points"] == 2);
    CHECK(env["input"]["has_shape"] == false);
    CHECK(env["tolerance"]["abs_eps"] == 1e-9);
    std::string gen = env["generator"].get<std::string>();
    CHECK(gen.rfind("spindlekit ", 0) == 0);
}

TEST_CASE("load_input dispatches on extension and content") {
    const char* jsonPath = "io_test_points.json";
    const char* csvPath = "io_test_points.csv";
    const char* oddPath = "io_test_points.dat";
    write_text_file(jsonPath, R"({"points": [[1, 2], [3, 4]]})");
    write_text_file(csvPath, "x1,x2\n1,2\n");
    write_text_file(oddPath, "  {\"points\": [[5, 6]]}");

    CHECK(load_input(jsonPath).points.size() == 2);
    CHECK(load_input(csvPath).points.size() == 1);
    CHECK(load_input(oddPath).points[0](0) == 5.0);
    CHECK_THROWS_AS(load_input("no_such_file_here.json"), ParseError);

    std::remove(jsonPath);
    std::remove(csvPath);
    std::remove(oddPath);
}
