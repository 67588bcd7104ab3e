#pragma once

#include "polyspan/geometry.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polyspan {

using VertexId = std::size_t;

/// Vertices plus vertex-disjoint simple polygonal obstacles. Each obstacle is
/// a list of vertex indices; counterclockwise after normalize_orientation().
struct Scene {
    std::vector<Point> vertices;
    std::vector<std::vector<VertexId>> obstacles;

    std::size_t size() const { return vertices.size(); }
    std::vector<Point> obstacle_polygon(std::size_t k) const;

    friend bool operator==(const Scene&, const Scene&) = default;
};

/// Reverses clockwise obstacles in place. Degenerate (zero-area) obstacles
/// are left as they are; validate() reports them.
void normalize_orientation(Scene& scene);

class GeneralPositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SceneError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ViolationKind {
    IndexOutOfRange,
    TooFewVertices,
    RepeatedOnBoundary,
    SharedVertex,
    Clockwise,
    SelfIntersecting,
    ObstaclesIntersect,
    VertexInsideObstacle,
    VertexOnObstacleBoundary,
    CoincidentVertices,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> indices;  // vertex or obstacle indices, see message
    std::string message;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

ValidationResult validate(const Scene& scene);

struct GeneralPositionReport {
    /// Pairs whose difference is parallel to a cone boundary (slope 0, +-sqrt3).
    std::vector<std::pair<VertexId, VertexId>> parallel_violations;
    std::vector<std::array<VertexId, 3>> collinear_violations;

    bool ok() const { return parallel_violations.empty() && collinear_violations.empty(); }
    std::string summary() const;
};

GeneralPositionReport check_general_position(const Scene& scene);

/// True iff q - p is parallel to a cone boundary, decided in Q(sqrt3).
bool parallel_to_cone_boundary(const Point& p, const Point& q);

/// Rotates every vertex about the origin by the angle with
/// cos = (k^2-1)/(k^2+1), sin = 2k/(k^2+1). Coordinates stay rational.
Scene perturb_by_rotation(const Scene& scene, unsigned long k);

/// Tries k = first_k, first_k+1, ... until the rotated scene has no
/// parallel violations. Rotation cannot remove collinear triples, so those
/// raise GeneralPositionError up front.
std::pair<Scene, unsigned long> perturb_until_general_position(const Scene& scene,
                                                               unsigned long first_k = 100,
                                                               unsigned long attempts = 10000);

enum class SplitMode { Passable, Blocked };

/// Removes shared vertices between obstacles. Passable gives each obstacle
/// its own copy pulled slightly into that obstacle; Blocked merges the two
/// obstacles through a thin waist at the shared point. Throws SceneError for
/// a vertex on three or more obstacles or when no separation works.
Scene split_shared_vertices(const Scene& scene, SplitMode mode);

/// Per-vertex obstacle incidence: the boundary neighbours of a vertex on a
/// (counterclockwise) obstacle. Empty for free vertices.
struct Incidence {
    std::size_t obstacle;
    VertexId prev;
    VertexId next;
};

std::vector<std::optional<Incidence>> incidence(const Scene& scene);

}  // namespace polyspan
