#pragma once

#include "polyspan/graph.hpp"
#include "polyspan/scene.hpp"
#include "polyspan/spanners.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyspan {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON instance: {"vertices": [[x, y], ...], "obstacles": [[i, j, k], ...]}.
/// Coordinates are JSON integers or strings holding an integer, a finite
/// decimal or "p/q". Obstacles are reoriented counterclockwise. Throws
/// ParseError naming the offending location, including validation failures.
Scene parse_instance(std::string_view text);

/// Like parse_instance but returns the scene without running validate().
Scene parse_instance_unchecked(std::string_view text);

/// Normalized text: integers as JSON numbers, everything else as the
/// shortest exact string. parse_instance(write_instance(s)) == s.
std::string write_instance(const Scene& scene);

/// "n m" header, then one "u v" line per edge with u < v, sorted.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

struct GeneratorConfig {
    std::size_t n_points = 20;
    std::size_t n_obstacles = 0;
    std::size_t obstacle_size = 4;  // samples per obstacle before taking the hull
    std::int64_t bbox = 1000;       // coordinates in [0, bbox]
    std::uint64_t seed = 1;
    std::size_t max_attempts = 200;
};

/// Integer-grid scene with disjoint convex obstacles (hulls of clustered
/// samples), validated and in general position. Deterministic in config.
/// Throws SceneError when the configuration cannot be met.
Scene generate(const GeneratorConfig& config);

struct SvgOptions {
    double width = 800.0;
    double margin = 20.0;
    std::vector<VertexId> highlight_path;   // drawn as a polyline
    std::optional<SubconeRef> highlight_cone;
    bool label_vertices = false;
};

std::string render_svg(const Scene& scene, const Graph& g, const SvgOptions& options = {});

}  // namespace polyspan
