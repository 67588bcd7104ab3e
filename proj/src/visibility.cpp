#include "polyspan/visibility.hpp"

#include <stdexcept>

namespace polyspan {

namespace {

class VisibilityTester {
public:
    explicit VisibilityTester(const Scene& scene) : scene_(scene) {
        polygons_.reserve(scene.obstacles.size());
        for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
            polygons_.push_back(scene.obstacle_polygon(k));
        }
    }

    bool operator()(VertexId u, VertexId v) const {
        const Segment s{scene_.vertices[u], scene_.vertices[v]};
        for (VertexId w = 0; w < scene_.vertices.size(); ++w) {
            if (w != u && w != v && on_open_segment(scene_.vertices[w], s.p, s.q)) return false;
        }
        for (const auto& poly : polygons_) {
            if (segment_properly_intersects_polygon(s, poly)) return false;
        }
        return true;
    }

private:
    const Scene& scene_;
    std::vector<std::vector<Point>> polygons_;
};

}  // namespace

bool visible(const Scene& scene, VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("visibility of a vertex with itself");
    if (u >= scene.size() || v >= scene.size()) throw std::out_of_range("vertex index");
    return VisibilityTester(scene)(u, v);
}

Graph visibility_graph(const Scene& scene) {
    const VisibilityTester test(scene);
    Graph g(scene.size());
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (VertexId v = u + 1; v < scene.size(); ++v) {
            if (test(u, v)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace polyspan
