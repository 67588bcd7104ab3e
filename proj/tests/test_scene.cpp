#include "doctest.h"

#include "polyspan/scene.hpp"
#include "polyspan/visibility.hpp"
#include "support.hpp"

using namespace polyspan;
using test_support::pt;
using test_support::scene;

TEST_CASE("validate accepts a disjoint triangle") {
    const Scene s = scene({{0, 0}, {4, 1}, {1, 3}, {9, 9}, {-5, 7}}, {{0, 1, 2}});
    CHECK(validate(s).ok());
}

TEST_CASE("validate names each defect") {
    SUBCASE("shared vertex") {
        const Scene s = scene({{0, 0}, {4, 1}, {1, 3}, {8, 2}, {6, 0}, {7, -3}}, {{0, 1, 2}, {1, 3, 4}});
        const auto r = validate(s);
        CHECK(r.has(ViolationKind::SharedVertex));
        CHECK(r.summary().find("shared vertex") != std::string::npos);
    }
    SUBCASE("repeated index") {
        Scene s = scene({{0, 0}, {4, 1}, {1, 3}});
        s.obstacles = {{0, 1, 2, 0}};
        const auto r = validate(s);
        CHECK(r.has(ViolationKind::RepeatedOnBoundary));
        CHECK(r.summary().find("vertex repeated on boundary") != std::string::npos);
    }
    SUBCASE("index out of range") {
        Scene s = scene({{0, 0}, {4, 1}, {1, 3}});
        s.obstacles = {{0, 1, 9}};
        CHECK(validate(s).has(ViolationKind::IndexOutOfRange));
    }
    SUBCASE("two-vertex obstacle") {
        Scene s = scene({{0, 0}, {4, 1}});
        s.obstacles = {{0, 1}};
        CHECK(validate(s).has(ViolationKind::TooFewVertices));
    }
    SUBCASE("clockwise obstacle") {
        Scene s = scene({{0, 0}, {4, 1}, {1, 3}});
        s.obstacles = {{0, 2, 1}};
        CHECK(validate(s).has(ViolationKind::Clockwise));
        normalize_orientation(s);
        CHECK(validate(s).ok());
    }
    SUBCASE("bow tie") {
        Scene s = scene({{0, 0}, {4, 4}, {4, 0}, {0, 4}});
        s.obstacles = {{0, 1, 2, 3}};
        CHECK(validate(s).has(ViolationKind::SelfIntersecting));
    }
    SUBCASE("overlapping obstacles") {
        const Scene s = scene({{0, 0}, {6, 1}, {2, 5}, {3, 2}, {9, 3}, {7, 8}}, {{0, 1, 2}, {3, 4, 5}});
        CHECK(validate(s).has(ViolationKind::ObstaclesIntersect));
    }
    SUBCASE("free vertex inside an obstacle") {
        const Scene s = scene({{0, 0}, {6, 1}, {2, 5}, {3, 2}}, {{0, 1, 2}});
        CHECK(validate(s).has(ViolationKind::VertexInsideObstacle));
    }
    SUBCASE("free vertex on an obstacle edge") {
        const Scene s = scene({{0, 0}, {6, 0}, {2, 5}, {3, 0}}, {{0, 1, 2}});
        CHECK(validate(s).has(ViolationKind::VertexOnObstacleBoundary));
    }
    SUBCASE("coincident vertices") {
        const Scene s = scene({{0, 0}, {1, 1}, {1, 1}});
        CHECK(validate(s).has(ViolationKind::CoincidentVertices));
    }
}

TEST_CASE("general position") {
    CHECK(check_general_position(scene({{0, 0}, {5, 0}})).parallel_violations.size() == 1);
    CHECK(check_general_position(scene({{0, 0}, {1, 2}, {3, -1}})).ok());
    CHECK(check_general_position(scene({{0, 0}, {1, 1}, {2, 2}})).collinear_violations.size() == 1);
    CHECK(parallel_to_cone_boundary(pt(0, 0), pt(5, 0)));
    CHECK_FALSE(parallel_to_cone_boundary(pt(0, 0), pt(97, 168)));  // slope 1.7320..., still rational
}

TEST_CASE("rotation by a Pythagorean angle") {
    const Scene s = scene({{5, 0}});
    const Scene r = perturb_by_rotation(s, 2);
    CHECK(r.vertices[0] == pt(3, 4));
    CHECK_THROWS_AS(perturb_by_rotation(s, 0), std::invalid_argument);

    // Large k: cos -> 1, sin -> 0.
    const Scene tiny = perturb_by_rotation(s, 1000000);
    CHECK(tiny.vertices[0].x.get_d() == doctest::Approx(5.0));
    CHECK(tiny.vertices[0].y.get_d() == doctest::Approx(0.0).epsilon(1e-4));

    const Scene h = scene({{0, 0}, {5, 0}});
    CHECK(check_general_position(perturb_by_rotation(h, 120)).ok());
    const auto [fixed, k] = perturb_until_general_position(h);
    CHECK(k >= 100);
    CHECK(check_general_position(fixed).ok());
    CHECK(perturb_until_general_position(scene({{0, 0}, {1, 2}})).second == 0);
    CHECK_THROWS_AS(perturb_until_general_position(scene({{0, 0}, {1, 1}, {2, 2}})), GeneralPositionError);
}

TEST_CASE("rotation preserves distances and orientation") {
    const Scene s = scene({{0, 0}, {7, 2}, {3, 9}, {-4, 5}}, {{0, 1, 2}});
    const Scene r = perturb_by_rotation(s, 37);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            const auto d = [](const Point& a, const Point& b) -> Rational {
                return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y);
            };
            CHECK(d(s.vertices[i], s.vertices[j]) == d(r.vertices[i], r.vertices[j]));
        }
    CHECK(validate(r).ok());
}

namespace {

// Two triangles touching at vertex 0; 5 and 6 look at each other through it.
Scene bowtie() {
    return scene({{0, 0}, {-6, 2}, {-5, -3}, {7, 1}, {5, 4}, {1, 9}, {-1, -9}}, {{0, 1, 2}, {0, 3, 4}});
}

}  // namespace

TEST_CASE("split_shared_vertices") {
    const Scene plain = scene({{0, 0}, {4, 1}, {1, 3}}, {{0, 1, 2}});
    CHECK(split_shared_vertices(plain, SplitMode::Passable) == plain);

    const Scene s = bowtie();
    REQUIRE(validate(s).has(ViolationKind::SharedVertex));

    SUBCASE("passable") {
        const Scene p = split_shared_vertices(s, SplitMode::Passable);
        CHECK(p.size() == s.size() + 1);
        CHECK(p.obstacles.size() == 2);
        CHECK(validate(p).ok());
        // The gap between the copies is open.
        CHECK_FALSE(visible(s, 5, 6));
        CHECK(visible(p, 5, 6));
        CHECK(visible(p, 0, s.size()));
    }
    SUBCASE("blocked") {
        const Scene b = split_shared_vertices(s, SplitMode::Blocked);
        CHECK(b.size() == s.size() + 1);
        CHECK(b.obstacles.size() == 1);
        CHECK(validate(b).ok());
        // The free vertices above and below the waist cannot see each other.
        CHECK_FALSE(visible(b, 5, 6));
    }
}

TEST_CASE("incidence lists boundary neighbours") {
    const Scene s = scene({{0, 0}, {4, 1}, {1, 3}, {9, 9}}, {{0, 1, 2}});
    const auto inc = incidence(s);
    REQUIRE(inc[1].has_value());
    CHECK(inc[1]->prev == 0);
    CHECK(inc[1]->next == 2);
    CHECK_FALSE(inc[3].has_value());
}
