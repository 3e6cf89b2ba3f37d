#include <doctest.h>

#include "spindlekit/detail/rng.hpp"
#include "spindlekit/geometry.hpp"

#include <cmath>

using namespace spindlekit;

namespace {

Vec v2(double x, double y) {
    Vec p(2);
    p << x, y;
    return p;
}

PointSet segment_set() { return PointSet(2, {v2(0, 0), v2(2, 0)}); }

PointSet square_set() { return PointSet(2, {v2(1, 1), v2(1, -1), v2(-1, 1), v2(-1, -1)}); }

}  // namespace

TEST_CASE("point set validation") {
    CHECK_THROWS_AS(PointSet(1, {Vec::Zero(1)}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(2, {Vec::Zero(3)}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet(2, {v2(0, 0)}, 1e-9, {"a", "b"}), std::invalid_argument);
    Vec bad = v2(0, 0);
    bad(1) = std::nan("");
    CHECK_THROWS_AS(PointSet(2, {bad}), std::invalid_argument);
}

TEST_CASE("duplicates merge keeping first") {
    PointSet S(2, {v2(0, 0), v2(1e-12, 0), v2(1, 1)});
    CHECK(S.size() == 2);
    CHECK(S.duplicates_merged() == 1);
    CHECK(S.find(v2(0, 0)).value() == 0);
    CHECK(S.find(v2(1, 1)).value() == 1);
    CHECK(!S.find(v2(5, 5)).has_value());
}

TEST_CASE("distances to a two point set") {
    PointSet S = segment_set();
    CHECK(distance_to_set(v2(0, 0), S) == 0.0);
    CHECK(distance_to_set(v2(1, 0), S) == 1.0);
    CHECK(distance_to_set(v2(0.9, 0), S) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(farthest_distance(v2(1, 0), S) == 1.0);
    CHECK(farthest_distance(v2(0, 0), S) == 2.0);
}

TEST_CASE("diameters") {
    CHECK(diameter(PointSet(2, {v2(3, 4)})) == 0.0);
    CHECK(diameter(segment_set()) == 2.0);
    CHECK(diameter(square_set()) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("projection and farthest ties from the square center") {
    PointSet S = square_set();
    Tolerance tol = tolerance_for(S);
    auto near = projection_indices(v2(0, 0), S, tol);
    auto far = farthest_indices(v2(0, 0), S, tol);
    CHECK(near.size() == 4);
    CHECK(far.size() == 4);
    auto single = projection_indices(v2(0.9, 0.9), S, tol);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == 0);
}

TEST_CASE("tolerance scales with the diameter") {
    Tolerance small = tolerance_for(PointSet(2, {v2(0, 0), v2(0.5, 0)}));
    CHECK(small.rel_scale == 1.0);
    Tolerance big = tolerance_for(PointSet(2, {v2(0, 0), v2(10, 0)}));
    CHECK(big.rel_scale == 10.0);
    CHECK(big.eps() == doctest::Approx(1e-8));
}

TEST_CASE("distance facts on random data") {
    detail::Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec> pts;
        int n = 2 + static_cast<int>(rng.bits() % 9);
        for (int i = 0; i < n; ++i) pts.push_back(v2(rng.uniform(-1, 1), rng.uniform(-1, 1)));
        PointSet S(2, pts);
        Vec x = v2(rng.uniform(-2, 2), rng.uniform(-2, 2));
        Vec y = v2(rng.uniform(-2, 2), rng.uniform(-2, 2));
        CHECK(distance_to_set(x, S) <= farthest_distance(x, S) + 1e-15);
        // triangle inequality through the set
        CHECK(distance_to_set(x, S) <= distance_to_set(y, S) + (x - y).norm() + 1e-12);
        CHECK(farthest_distance(x, S) <= farthest_distance(y, S) + (x - y).norm() + 1e-12);
    }
}
