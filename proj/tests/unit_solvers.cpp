#include <doctest.h>

#include <cmath>

#include "spindlekit/lp.hpp"
#include "spindlekit/qp.hpp"

using namespace spindlekit;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {
VectorXd vec(std::initializer_list<double> v) {
    VectorXd r(static_cast<int>(v.size()));
    int i = 0;
    for (double x : v) r(i++) = x;
    return r;
}
}  // namespace

TEST_CASE("simplex on a box") {
    MatrixXd A(2, 2);
    A << 1, 0, 0, 1;
    auto r = simplex_max(vec({1, 1}), A, vec({1, 2}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(r.x(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.x(1) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("simplex with negative rhs needs phase one") {
    MatrixXd A(1, 1);
    A << -1;
    auto r = simplex_max(vec({-1}), A, vec({-1}));
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.x(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("simplex reports infeasible") {
    MatrixXd A(2, 1);
    A << 1, -1;
    auto r = simplex_max(vec({1}), A, vec({1, -2}));
    CHECK(r.status == LpStatus::infeasible);
}

TEST_CASE("simplex reports unbounded") {
    MatrixXd A(1, 1);
    A << -1;
    auto r = simplex_max(vec({1}), A, vec({0}));
    CHECK(r.status == LpStatus::unbounded);
}

TEST_CASE("simplex honors the iteration cap") {
    MatrixXd A(2, 2);
    A << 1, 0, 0, 1;
    auto r = simplex_max(vec({1, 1}), A, vec({1, 2}), 1);
    CHECK(r.status == LpStatus::iteration_limit);
}

TEST_CASE("min norm with one halfspace lands on the projection") {
    MatrixXd A(1, 2);
    A << 1, 0;
    auto r = min_norm_in_polyhedron(A, vec({-1}), 100);
    REQUIRE(r.status == QpStatus::optimal);
    CHECK(r.x(0) == -1.0);
    CHECK(r.x(1) == 0.0);
    CHECK(r.objective == 1.0);
    REQUIRE(r.active.size() == 1);
    CHECK(r.active[0] == 0);
}

TEST_CASE("min norm with origin feasible returns zero") {
    MatrixXd A(2, 2);
    A << 1, 0, 0, 1;
    auto r = min_norm_in_polyhedron(A, vec({1, 2}), 100);
    REQUIRE(r.status == QpStatus::optimal);
    CHECK(r.objective == 0.0);
    CHECK(r.active.empty());
}

TEST_CASE("min norm with two oblique rows activates both") {
    const double s = 1.0 / std::sqrt(2.0);
    MatrixXd A(2, 2);
    A << s, s, s, -s;
    auto r = min_norm_in_polyhedron(A, vec({-1, -1}), 100);
    REQUIRE(r.status == QpStatus::optimal);
    CHECK(r.x(0) == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.x(1) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.objective == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(r.active.size() == 2);
}

TEST_CASE("min norm corner system") {
    // three rows all tight at the unit diagonal
    const double s = 1.0 / std::sqrt(2.0);
    MatrixXd A(3, 2);
    A << 0, -1, -1, 0, -s, -s;
    auto r = min_norm_in_polyhedron(A, vec({-s, -s, -1}), 100);
    REQUIRE(r.status == QpStatus::optimal);
    CHECK(r.x(0) == doctest::Approx(s).epsilon(1e-14));
    CHECK(r.x(1) == doctest::Approx(s).epsilon(1e-14));
    CHECK(r.objective == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < 3; ++i)
        CHECK(A.row(i).dot(r.x) <= vec({-s, -s, -1})(i) + 1e-12);
}

TEST_CASE("min norm detects an empty polyhedron") {
    MatrixXd A(2, 1);
    A << 1, -1;
    auto r = min_norm_in_polyhedron(A, vec({-1, -1}), 100);
    CHECK(r.status == QpStatus::infeasible);
}

TEST_CASE("min norm honors the iteration cap") {
    const double s = 1.0 / std::sqrt(2.0);
    MatrixXd A(2, 2);
    A << s, s, s, -s;
    auto r = min_norm_in_polyhedron(A, vec({-1, -1}), 1);
    CHECK(r.status == QpStatus::iteration_limit);
}
