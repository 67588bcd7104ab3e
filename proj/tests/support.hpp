#pragma once

#include "polyspan/io.hpp"
#include "polyspan/scene.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace test_support {

inline polyspan::Point pt(long x, long y) { return {polyspan::Rational(x), polyspan::Rational(y)}; }

inline polyspan::Scene scene(std::initializer_list<std::pair<long, long>> coords,
                             std::vector<std::vector<polyspan::VertexId>> obstacles = {}) {
    polyspan::Scene s;
    for (const auto& [x, y] : coords) s.vertices.push_back(pt(x, y));
    s.obstacles = std::move(obstacles);
    polyspan::normalize_orientation(s);
    return s;
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(POLYSPAN_FIXTURES) + "/" + name; }

inline polyspan::Scene fixture(const std::string& name) {
    return polyspan::parse_instance(read_text(fixture_path(name)));
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "micro.json",         "split_positive_cone.json", "split_negative_cone.json",
        "canonical_sequence.json", "nonconvex.json",      "visibility_demo.json",
        "g7_shortcut.json"};
    return names;
}

}  // namespace test_support
