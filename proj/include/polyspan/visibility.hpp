#pragma once

#include "polyspan/graph.hpp"
#include "polyspan/scene.hpp"

namespace polyspan {

/// Segment uv does not properly intersect any obstacle and passes through no
/// third vertex. Boundary edges and chords along the outside are visible.
bool visible(const Scene& scene, VertexId u, VertexId v);

/// All-pairs visibility. Pairs are independent, so this is a plain
/// O(n^2 * obstacle edges) loop over read-only data.
Graph visibility_graph(const Scene& scene);

}  // namespace polyspan
