#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "rcn/rcn.hpp"

using namespace rcn;

TEST_CASE("orientation signs") {
    Point o{0, 0}, e1{1, 0}, e2{0, 1};
    CHECK(orientation(o, e1, e2) == 1);
    CHECK(orientation(o, e2, e1) == -1);
    CHECK(orientation(o, e1, Point{2, 0}) == 0);
    // large coordinates stay exact
    long long big = 1LL << 40;
    CHECK(orientation({-big, -big}, {big, big - 1}, {big, big}) == 1);
}

TEST_CASE("general position detection") {
    CHECK(in_general_position({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(general_position_violation({{0, 0}, {1, 1}, {0, 0}}) ==
          "duplicate points at indices 0,2");
    CHECK(general_position_violation({{0, 0}, {1, 1}, {3, 3}, {1, 0}}) == "collinear triple 0,1,2");
    CHECK(general_position_violation({{0, 0}, {5, 1}, {1, 7}}).empty());
}

TEST_CASE("make_point_set validation") {
    CHECK_THROWS_AS(make_point_set({{0, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_point_set({{0, 0}, {1, 1}, {2, 2}}), std::invalid_argument);
    CHECK(make_point_set({{0, 0}, {1, 0}, {0, 1}}).n() == 3);
}

TEST_CASE("convex hull size") {
    CHECK(convex_hull_size(fixtures::unit_square()) == 4);
    CHECK(convex_hull_size(fixtures::triangle_interior()) == 3);
    for (int n = 3; n <= 12; ++n) CHECK(convex_hull_size(fixtures::convex_gon(n)) == n);
    CHECK(convex_hull_size(fixtures::tuned_three_ray(6)) == 3);
}

TEST_CASE("hull size equals the number of 0-edges plus-one-free") {
    // E_0 of the edge vector counts hull edges, which equals hull vertices
    for (const PointSet& ps : fixtures::corpus()) {
        EdgeVector ev = edge_vector(ps);
        CHECK(ev.counts[0] == convex_hull_size(ps));
    }
}

TEST_CASE("generators produce valid sets deterministically") {
    PointSet a = generate(GenKind::convex, 7, 42);
    PointSet b = generate(GenKind::convex, 7, 42);
    REQUIRE(a.n() == b.n());
    for (int i = 0; i < a.n(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }
    CHECK(convex_hull_size(a) == 7);
    CHECK_THROWS_AS(generate(GenKind::three_ray, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(GenKind::convex, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(GenKind::three_ray, 6, 1, 1), std::invalid_argument);
    for (const PointSet& ps : fixtures::corpus()) CHECK(in_general_position(ps.points));
}

TEST_CASE("generator kind names round-trip") {
    for (GenKind k : {GenKind::convex, GenKind::random_disk, GenKind::three_ray})
        CHECK(gen_kind_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(gen_kind_from_string("spiral"), std::invalid_argument);
}
