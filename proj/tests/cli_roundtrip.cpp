#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "spindlekit/io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string out = "cli_stdout_" + std::to_string(counter) + ".tmp";
    std::string err = "cli_stderr_" + std::to_string(counter) + ".tmp";
    ++counter;
    std::string cmd =
        std::string("\"") + SPINDLEKIT_CLI_PATH + "\" " + args + " >" + out + " 2>" + err;
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    std::remove(out.c_str());
    std::remove(err.c_str());
    return r;
}

std::string data(const std::string& name) {
    return std::string("\"") + SPINDLEKIT_DATA_DIR + "/" + name + "\"";
}

spindlekit::Json parse_out(const RunResult& r) { return spindlekit::Json::parse(r.out); }

}  // namespace

TEST_CASE("check decides spherical support with matching exit codes") {
    auto holds = run_cli("check " + data("circle12.json") + " -r 1");
    CHECK(holds.code == 0);
    auto rep = parse_out(holds);
    CHECK(rep["schema"] == "spindlekit-report-1");
    CHECK(rep["check"]["verdict"] == "holds");
    CHECK(rep["check"]["witnesses"].size() == 12);
    CHECK(rep["check"]["property"] == "spherical-support");

    auto fails = run_cli("check " + data("circle12.json") + " -r 0.9");
    CHECK(fails.code == 1);
    CHECK(parse_out(fails)["check"]["verdict"] == "fails");
}

TEST_CASE("check handles the radius-free property and missing radius") {
    auto coll = run_cli("check " + data("collinear.json") + " --property exterior-infty");
    CHECK(coll.code == 0);

    auto inner = run_cli("check " + data("square_plus_center.json") +
                         " --property exterior-infty");
    CHECK(inner.code == 1);

    auto missing = run_cli("check " + data("circle12.json"));
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);
}

TEST_CASE("check exterior sphere and the grid oracle") {
    auto ext = run_cli("check " + data("circle12.json") + " --property exterior-sphere -r 0.5");
    CHECK(ext.code == 0);

    auto oracle = run_cli("check " + data("circle12.json") + " -r 1 --oracle");
    CHECK(oracle.code == 0);
    auto rep = parse_out(oracle);
    CHECK(rep["oracle"]["mismatches"] == 0);
    CHECK(rep["oracle"]["probes"].get<long>() > 0);
}

TEST_CASE("check reads csv input") {
    auto r = run_cli("check " + data("square.csv") + " -r 1.4142135623730951");
    CHECK(r.code == 0);
    CHECK(parse_out(r)["check"]["verdict"] == "holds");
}

TEST_CASE("certify produces the envelope bundle for the square") {
    auto r = run_cli("certify " + data("square.json") + " -r 1.4142135623730951");
    REQUIRE(r.code == 0);
    auto rep = parse_out(r);
    REQUIRE(rep.contains("certify"));
    const auto& residuals = rep["certify"]["residuals"];
    REQUIRE(residuals.size() == 4);
    for (const auto& x : residuals) CHECK(std::fabs(x.get<double>()) <= 1e-9);
    CHECK(rep["certify"]["region"]["generators"].size() == 1);
    CHECK(rep["certify"]["certificates"].size() == 4);
}

TEST_CASE("certify falls back to a check report when the property fails") {
    auto r = run_cli("certify " + data("square.json") + " -r 1.2");
    CHECK(r.code == 1);
    auto rep = parse_out(r);
    CHECK(rep.contains("check"));
    CHECK(!rep.contains("certify"));

    auto no_cert = run_cli("certify " + data("square.json") +
                           " --property exterior-sphere -r 1");
    CHECK(no_cert.code == 2);
}

TEST_CASE("certify handles the halfspace property") {
    auto r = run_cli("certify " + data("collinear.json") + " --property exterior-infty");
    REQUIRE(r.code == 0);
    auto rep = parse_out(r);
    CHECK(rep["certify"]["certificates"].size() == 3);
    for (const auto& x : rep["certify"]["residuals"])
        CHECK(std::fabs(x.get<double>()) <= 1e-8);
}

TEST_CASE("hull classifies probes and empty intersections") {
    auto inside = run_cli("hull " + data("twopoints.json") + " -r 1 --probe 1 0");
    CHECK(inside.code == 0);
    auto rep = parse_out(inside);
    CHECK(rep["probe"]["location"] == "interior");

    auto outside = run_cli("hull " + data("twopoints.json") + " -r 1 --probe 5 5");
    CHECK(outside.code == 1);
    CHECK(parse_out(outside)["probe"]["location"] == "outside");

    auto empty = run_cli("hull " + data("collinear.json") + " -r 0.4");
    CHECK(empty.code == 1);
    CHECK(parse_out(empty)["hull"]["empty"] == true);
}

TEST_CASE("prop31 reports residual maxima and a gate") {
    auto pinned = run_cli("prop31 " + data("twopoints.json") + " -r 1 --big-radii 1");
    CHECK(pinned.code == 0);
    auto rep = parse_out(pinned);
    CHECK(rep["prop31"]["holds"] == true);
    CHECK(rep["prop31"]["rows"].size() == 2);
    CHECK(rep["prop31"]["skipped"] == 0);
    CHECK(std::fabs(rep["prop31"]["max_alignment"].get<double>()) <= 1e-12);

    auto dflt = run_cli("prop31 " + data("twopoints.json") + " -r 1");
    CHECK(dflt.code == 0);
    auto drep = parse_out(dflt);
    CHECK(drep["prop31"]["skipped"] == 2);
    CHECK(drep["prop31"]["rows"].size() == 6);
}

TEST_CASE("scan brackets the circle radius and reports misses as null") {
    auto r = run_cli("scan " + data("circle12.json"));
    CHECK(r.code == 0);
    auto rep = parse_out(r);
    REQUIRE(rep["scan"]["minimal_radius"].is_number());
    CHECK(std::fabs(rep["scan"]["minimal_radius"].get<double>() - 1.0) <= 1e-6);

    auto never = run_cli("scan " + data("collinear.json"));
    CHECK(never.code == 1);
    CHECK(parse_out(never)["scan"]["minimal_radius"].is_null());
}

TEST_CASE("render emits svg for shapes and rejects 3d input") {
    auto r = run_cli("render " + data("lens_shape.json"));
    CHECK(r.code == 0);
    CHECK(r.out.find("<svg") != std::string::npos);
    CHECK(r.out.find("</svg>") != std::string::npos);

    auto again = run_cli("render " + data("lens_shape.json"));
    CHECK(again.out == r.out);

    auto odd = run_cli("render " + data("octahedron3d.json"));
    CHECK(odd.code == 2);
}

TEST_CASE("bad inputs exit with usage code 2") {
    auto bad = run_cli("check " + data("bad.json") + " -r 1");
    CHECK(bad.code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);

    auto gone = run_cli("check no_such_input.json -r 1");
    CHECK(gone.code == 2);

    auto unknown = run_cli("check " + data("circle12.json") + " --property sideways -r 1");
    CHECK(unknown.code == 2);
}

TEST_CASE("reports and svg files are byte deterministic") {
    const char* rep1 = "cli_rep_a.json";
    const char* rep2 = "cli_rep_b.json";
    const char* svg1 = "cli_img_a.svg";
    const char* svg2 = "cli_img_b.svg";

    auto a = run_cli("certify " + data("square.json") + " -r 1.4142135623730951 --report " +
                     rep1 + " --svg " + svg1);
    auto b = run_cli("certify " + data("square.json") + " -r 1.4142135623730951 --report " +
                     rep2 + " --svg " + svg2);
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out.empty());
    std::string ra = slurp(rep1), rb = slurp(rep2);
    CHECK(!ra.empty());
    CHECK(ra == rb);
    std::string sa = slurp(svg1), sb = slurp(svg2);
    CHECK(!sa.empty());
    CHECK(sa == sb);
    CHECK(sa.find("<svg") != std::string::npos);

    std::remove(rep1);
    std::remove(rep2);
    std::remove(svg1);
    std::remove(svg2);
}
