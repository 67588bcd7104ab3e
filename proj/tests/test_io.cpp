#include "doctest.h"

#include "polyspan/io.hpp"
#include "polyspan/spanners.hpp"
#include "support.hpp"

#include <regex>

using namespace polyspan;
using test_support::scene;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
}

std::string error_of(const std::string& text) {
    try {
        parse_instance(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse a triangle instance") {
    const Scene s = parse_instance(R"({"vertices": [[0,0],[2,0],[1,2]], "obstacles": [[0,1,2]]})");
    CHECK(s.size() == 3);
    REQUIRE(s.obstacles.size() == 1);
    CHECK(s.obstacles[0].size() == 3);
}

TEST_CASE("coordinates are exact") {
    const Scene s = parse_instance(R"({"vertices": [["0.5", "-7/4"], [3, "1.25"]]})");
    CHECK(s.vertices[0].x == Rational(1, 2));
    CHECK(s.vertices[0].y == Rational(-7, 4));
    CHECK(s.vertices[1].y == Rational(5, 4));
}

TEST_CASE("clockwise obstacles are reoriented") {
    const Scene s = parse_instance(R"({"vertices": [[0,0],[1,2],[2,0]], "obstacles": [[0,1,2]]})");
    CHECK(signed_area2(s.obstacle_polygon(0)) > 0);
}

TEST_CASE("parse errors carry a location") {
    CHECK(error_of(R"({"vertices": [[0,0],[2,0],[1,2]], "obstacles": [[0,1,9]]})").find("obstacles[0][2]: index out of range") !=
          std::string::npos);
    CHECK(error_of(R"({"vertices": [[0,0],[2.5,0]]})").find("vertices[1][0]") != std::string::npos);
    CHECK(error_of(R"({"vertices": [[0,0],["x",0]]})").find("bad coordinate") != std::string::npos);
    CHECK(error_of(R"({"vertices": [[0,0,1]]})").find("vertices[0]") != std::string::npos);
    CHECK(error_of(R"({"vertices": [[0,0]], "extra": 1})").find("unknown key") != std::string::npos);
    CHECK(error_of("{\"vertices\": [").find("malformed JSON") != std::string::npos);
    CHECK(error_of(R"([1, 2])").find("object") != std::string::npos);
    CHECK(error_of(R"({"obstacles": []})").find("vertices") != std::string::npos);
    CHECK(error_of(R"({"vertices": [[0,0],[4,1],[1,3],[8,2],[6,0]], "obstacles": [[0,1,2],[1,3,4]]})")
              .find("shared vertex") != std::string::npos);
}

TEST_CASE("write then parse is the identity") {
    Scene s = scene({{0, 0}, {4, 1}, {1, 3}, {9, 9}});
    s.vertices.push_back({Rational(1, 3), Rational(-5, 8)});
    const std::string text = write_instance(s);
    CHECK(parse_instance(text) == s);
    CHECK(write_instance(parse_instance(text)) == text);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(text.find("\"-0.625\"") != std::string::npos);

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GeneratorConfig c;
        c.n_points = 30;
        c.n_obstacles = 3;
        c.seed = seed;
        const Scene g = generate(c);
        CHECK(parse_instance(write_instance(g)) == g);
    }
    for (const auto& name : test_support::fixture_names()) {
        const Scene f = test_support::fixture(name);
        CHECK(parse_instance(write_instance(f)) == f);
    }
}

TEST_CASE("edge lists") {
    Graph g(5);
    g.add_edge(3, 1);
    g.add_edge(0, 4);
    g.add_edge(2, 1);
    const std::string text = write_edge_list(g);
    CHECK(text == "5 3\n0 4\n1 2\n1 3\n");
    CHECK(parse_edge_list(text) == g);
    CHECK(parse_edge_list("3 1\r\n\n2 0\n") == [] {
        Graph h(3);
        h.add_edge(0, 2);
        return h;
    }());
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1 2\n"), ParseError);
}

TEST_CASE("generator") {
    GeneratorConfig c;
    c.n_points = 10;
    c.seed = 1;
    const Scene a = generate(c);
    CHECK(a.size() == 10);
    CHECK(check_general_position(a).ok());
    CHECK(write_instance(generate(c)) == write_instance(a));

    c.n_points = 40;
    c.n_obstacles = 3;
    c.seed = 7;
    const Scene b = generate(c);
    CHECK(b.size() == 40);
    CHECK(b.obstacles.size() == 3);
    CHECK(validate(b).ok());
    CHECK(check_general_position(b).ok());
    for (std::size_t k = 0; k < b.obstacles.size(); ++k) {
        // Convex: every turn along the counterclockwise boundary is a left turn.
        const auto poly = b.obstacle_polygon(k);
        for (std::size_t i = 0; i < poly.size(); ++i)
            CHECK(orient(poly[i], poly[(i + 1) % poly.size()], poly[(i + 2) % poly.size()]) == Orientation::CCW);
    }
    for (const auto& p : b.vertices) {
        CHECK(p.x.get_den() == 1);
        CHECK(p.x >= 0);
        CHECK(p.x <= c.bbox);
    }

    c.seed = 8;
    CHECK(write_instance(generate(c)) != write_instance(b));

    GeneratorConfig infeasible;
    infeasible.n_points = 5;
    infeasible.n_obstacles = 2;
    CHECK_THROWS_AS(generate(infeasible), SceneError);
    infeasible.n_obstacles = 0;
    infeasible.obstacle_size = 2;
    CHECK_THROWS_AS(generate(infeasible), SceneError);
}

TEST_CASE("svg rendering") {
    const std::string empty = render_svg(Scene{}, Graph(0));
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("</svg>") != std::string::npos);
    CHECK(count(empty, "<circle") == 0);

    const Scene micro = scene({{0, 0}, {-1, 2}, {1, 3}});
    const std::string m = render_svg(micro, build_g_infinity(micro));
    CHECK(count(m, "<circle") == 3);
    CHECK(count(m, "<line") == 2);
    CHECK(count(m, "<polygon") == 0);

    const Scene tri = scene({{0, 0}, {2, 0}, {1, 2}, {-1, 1}}, {{0, 1, 2}});
    SvgOptions options;
    options.highlight_path = {3, 0, 1};
    options.highlight_cone = SubconeRef{0, {ConeSign::Positive, 0}, Side::Whole};
    options.label_vertices = true;
    const std::string t = render_svg(tri, Graph(4), options);
    CHECK(count(t, "class=\"obstacle\"") == 1);
    CHECK(count(t, "<polyline") == 1);
    CHECK(count(t, "class=\"cone\"") == 1);
    CHECK(count(t, "<text") == 4);
    CHECK(std::regex_search(t, std::regex("viewBox=\"0 0 [0-9.]+ [0-9.]+\"")));
}
