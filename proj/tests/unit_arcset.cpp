#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spindlekit/arcset.hpp"

using namespace spindlekit;

namespace {
constexpr double pi = std::numbers::pi;

void check_normalized(const ArcSet& a) {
    double prev = -1.0;
    for (const auto& iv : a.intervals()) {
        CHECK(iv.lo >= 0.0);
        CHECK(iv.hi <= tau);
        CHECK(iv.lo <= iv.hi);
        CHECK(iv.lo > prev);
        prev = iv.hi;
    }
}
}  // namespace

TEST_CASE("wrap_angle folds into [0, tau)") {
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(tau) == 0.0);
    CHECK(wrap_angle(-pi / 2) == doctest::Approx(3 * pi / 2).epsilon(1e-15));
    CHECK(wrap_angle(2 * tau + 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(wrap_angle(-tau) == 0.0);
}

TEST_CASE("full and none") {
    auto f = ArcSet::full(1.0);
    auto n = ArcSet::none(1.0);
    CHECK(!f.is_empty());
    CHECK(f.measure() == doctest::Approx(tau).epsilon(1e-15));
    CHECK(n.is_empty());
    CHECK(n.measure() == 0.0);
    CHECK(f.contains(0.0, 0.0));
    CHECK(f.contains(5.9, 0.0));
    CHECK(!n.contains(0.0, 1e-9));
}

TEST_CASE("single interior constraint") {
    auto a = ArcSet::full(1.0);
    a.intersect_closed_arc(pi, pi / 2);
    REQUIRE(a.intervals().size() == 1);
    CHECK(a.intervals()[0].lo == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(a.intervals()[0].hi == doctest::Approx(3 * pi / 2).epsilon(1e-15));
    CHECK(a.measure() == doctest::Approx(pi).epsilon(1e-14));
    CHECK(a.contains(pi, 0.0));
    CHECK(a.contains(pi / 2, 1e-12));
    CHECK(!a.contains(0.0, 1e-6));
    check_normalized(a);
}

TEST_CASE("constraint crossing the seam splits in storage, not in meaning") {
    auto a = ArcSet::full(1.0);
    a.intersect_closed_arc(0.0, pi / 3);
    CHECK(a.intervals().size() == 2);
    CHECK(a.measure() == doctest::Approx(2 * pi / 3).epsilon(1e-13));
    CHECK(a.contains(0.1, 0.0));
    CHECK(a.contains(6.0, 0.0));
    CHECK(a.contains(0.0, 0.0));
    CHECK(!a.contains(pi, 1e-6));
    check_normalized(a);
}

TEST_CASE("disjoint constraints clear the set") {
    auto a = ArcSet::full(1.0);
    a.intersect_closed_arc(0.0, 0.5);
    a.intersect_closed_arc(pi, 0.5);
    CHECK(a.is_empty());
    CHECK(a.measure() == 0.0);
}

TEST_CASE("tangent constraints keep their common direction") {
    auto a = ArcSet::full(1.0);
    a.intersect_closed_arc(0.0, 1.0);
    a.intersect_closed_arc(2.0, 1.0);  // touches the first arc exactly at 1
    REQUIRE(!a.is_empty());
    CHECK(a.measure() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(a.contains(1.0, 1e-9));
    CHECK(!a.contains(0.5, 1e-6));

    // near miss inside ang_eps is rescued as a point interval
    auto b = ArcSet::full(1.0);
    b.intersect_closed_arc(0.0, 1.0);
    b.intersect_closed_arc(2.0 + 5e-13, 1.0);
    REQUIRE(!b.is_empty());
    CHECK(b.measure() == doctest::Approx(0.0).epsilon(1e-11));
    CHECK(b.contains(1.0, 1e-6));

    // a miss beyond ang_eps is a real miss
    auto c = ArcSet::full(1.0);
    c.intersect_closed_arc(0.0, 1.0);
    c.intersect_closed_arc(2.0 + 1e-6, 1.0);
    CHECK(c.is_empty());
}

TEST_CASE("vacuous and clearing half widths") {
    auto a = ArcSet::full(1.0);
    a.intersect_closed_arc(1.0, pi);
    CHECK(a.measure() == doctest::Approx(tau).epsilon(1e-15));
    a.intersect_closed_arc(1.0, 4.0);  // still vacuous
    CHECK(a.measure() == doctest::Approx(tau).epsilon(1e-15));
    a.intersect_closed_arc(1.0, -1.0);
    CHECK(a.is_empty());
}

TEST_CASE("covers reflects set inclusion up to eps") {
    auto f = ArcSet::full(1.0);
    auto mid = ArcSet::full(1.0);
    mid.intersect_closed_arc(pi, pi / 2);
    auto tight = ArcSet::full(1.0);
    tight.intersect_closed_arc(pi, pi / 4);
    auto n = ArcSet::none(1.0);

    CHECK(f.covers(mid, 1e-12));
    CHECK(mid.covers(tight, 1e-12));
    CHECK(f.covers(tight, 1e-12));
    CHECK(!tight.covers(mid, 1e-9));
    CHECK(!mid.covers(f, 1e-9));
    CHECK(mid.covers(mid, 0.0));
    CHECK(mid.covers(n, 0.0));
    CHECK(!n.covers(tight, 1e-9));

    // dilation tolerance: a hair wider is fine at 1e-9, not at 1e-12
    auto hair = ArcSet::full(1.0);
    hair.intersect_closed_arc(pi, pi / 2 + 1e-10);
    CHECK(mid.covers(hair, 1e-9));
    CHECK(!mid.covers(hair, 1e-12));
}

TEST_CASE("certificate angles sample every interval") {
    auto f = ArcSet::full(1.0);
    auto af = f.certificate_angles();
    REQUIRE(af.size() == 2);
    CHECK(af[0] == 0.0);
    CHECK(af[1] == doctest::Approx(pi).epsilon(1e-15));

    auto mid = ArcSet::full(1.0);
    mid.intersect_closed_arc(pi, pi / 2);
    auto am = mid.certificate_angles();
    REQUIRE(am.size() == 3);
    CHECK(am[0] == doctest::Approx(pi / 2).epsilon(1e-15));
    CHECK(am[1] == doctest::Approx(pi).epsilon(1e-15));
    CHECK(am[2] == doctest::Approx(3 * pi / 2).epsilon(1e-15));

    auto pt = ArcSet::full(1.0);
    pt.intersect_closed_arc(0.0, 1.0);
    pt.intersect_closed_arc(2.0, 1.0);
    auto ap = pt.certificate_angles();
    REQUIRE(ap.size() == 1);
    CHECK(ap[0] == doctest::Approx(1.0).epsilon(1e-12));

    auto wrapped = ArcSet::full(1.0);
    wrapped.intersect_closed_arc(0.0, pi / 3);
    auto aw = wrapped.certificate_angles();
    CHECK(aw.size() == 5);  // seam endpoint deduplicated
    for (double th : aw) CHECK(wrapped.contains(th, 1e-12));
}
