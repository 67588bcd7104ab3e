#include "polyspan/verifier.hpp"

#include "polyspan/visibility.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <queue>

namespace polyspan {

PlanarityReport check_planarity(const Scene& scene, const Graph& g) {
    PlanarityReport report;
    const auto edges = g.edges();
    std::vector<Segment> segs;
    segs.reserve(edges.size());
    for (const auto& [a, b] : edges) segs.push_back({scene.vertices.at(a), scene.vertices.at(b)});

    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (segments_properly_intersect(segs[i], segs[j])) {
                report.crossing_pairs.emplace_back(edges[i], edges[j]);
            }
        }
    }
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) {
        const auto poly = scene.obstacle_polygon(k);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (segment_properly_intersects_polygon(segs[i], poly)) {
                report.obstacle_conflicts.emplace_back(edges[i], k);
            }
        }
    }
    return report;
}

DegreeReport degree_report(const Graph& g) {
    DegreeReport r;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) r.max_degree = std::max(r.max_degree, g.degree(v));
    r.histogram.assign(r.max_degree + 1, 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) ++r.histogram[g.degree(v)];
    return r;
}

namespace {

struct Coords {
    std::vector<double> x, y;
    explicit Coords(const Scene& scene) {
        for (const auto& p : scene.vertices) {
            x.push_back(p.x.get_d());
            y.push_back(p.y.get_d());
        }
    }
    double dist(VertexId a, VertexId b) const { return std::hypot(x[a] - x[b], y[a] - y[b]); }
};

std::vector<double> dijkstra(const Coords& c, const Graph& g, VertexId source) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> d(g.vertex_count(), inf);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[source] = 0.0;
    pq.emplace(0.0, source);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (VertexId v : g.neighbors(u)) {
            const double nd = du + c.dist(u, v);
            if (nd < d[v]) {
                d[v] = nd;
                pq.emplace(nd, v);
            }
        }
    }
    return d;
}

}  // namespace

std::vector<double> shortest_paths(const Scene& scene, const Graph& g, VertexId source) {
    return dijkstra(Coords(scene), g, source);
}

StretchReport stretch_factor(const Scene& scene, const Graph& sub, const Graph& base, bool keep_pairs) {
    if (sub.vertex_count() != base.vertex_count() || sub.vertex_count() != scene.size()) {
        throw std::invalid_argument("stretch_factor: vertex sets differ");
    }
    const Coords c(scene);
    StretchReport report;
    for (VertexId x = 0; x < scene.size(); ++x) {
        const auto ds = dijkstra(c, sub, x);
        const auto db = dijkstra(c, base, x);
        for (VertexId y = x + 1; y < scene.size(); ++y) {
            if (!std::isfinite(db[y])) continue;
            const double ratio = ds[y] / db[y];
            if (keep_pairs) report.per_pair.push_back({x, y, ratio});
            if (!report.witness_pair || ratio > report.max_ratio) {
                report.max_ratio = ratio;
                report.witness_pair = std::make_pair(x, y);
            }
        }
    }
    if (!report.witness_pair) report.max_ratio = 1.0;
    return report;
}

double per_edge_bound_factor(double theta) {
    return std::sqrt(3.0) * std::cos(theta) + std::sin(theta);
}

EdgeBoundReport check_per_edge_bound_ginf(const Scene& scene, const Graph& ginf, const Graph& vis,
                                          double rel_tol) {
    const Coords c(scene);
    EdgeBoundReport report;
    std::map<VertexId, std::vector<double>> cache;
    for (auto [u, v] : vis.edges()) {
        if (!cone_of(scene.vertices[u], scene.vertices[v]).positive()) std::swap(u, v);
        const ConeLabel label = cone_of(scene.vertices[u], scene.vertices[v]);
        const ExactPoint b2 = doubled_bisector(label);
        const double bx = b2.x.to_double() / 2, by = b2.y.to_double() / 2;
        const double dx = c.x[v] - c.x[u], dy = c.y[v] - c.y[u];
        // |uv| cos(theta) and |uv| sin(theta) relative to the bisector.
        const double along = dx * bx + dy * by;
        const double across = std::abs(bx * dy - by * dx);
        const double bound = std::sqrt(3.0) * along + across;

        auto it = cache.find(u);
        if (it == cache.end()) it = cache.emplace(u, dijkstra(c, ginf, u)).first;
        const double path = it->second[v];
        ++report.edges_checked;
        report.worst_ratio = std::max(report.worst_ratio, path / bound);
        if (!(path <= bound * (1.0 + rel_tol))) {
            report.ok = false;
            report.witnesses.push_back({u, v, path, bound});
        }
    }
    return report;
}

EdgeBoundReport check_per_edge_bound_ginf(const Scene& scene, const Graph& ginf, double rel_tol) {
    return check_per_edge_bound_ginf(scene, ginf, visibility_graph(scene), rel_tol);
}

StructuralReport check_canonical_paths(const Scene& scene, const Graph& ginf, const Graph& g) {
    StructuralReport report;
    for (const auto& seq : canonical_sequences(scene, ginf)) {
        for (std::size_t i = 0; i + 1 < seq.vertices.size(); ++i) {
            ++report.pairs_checked;
            const VertexId a = seq.vertices[i], b = seq.vertices[i + 1];
            if (!g.has_edge(a, b)) {
                report.witnesses.push_back({seq.apex, seq.subcone, a, b, "canonical-path edge missing"});
            }
        }
    }
    return report;
}

StructuralReport check_empty_triangles(const Scene& scene, const Graph& ginf) {
    StructuralReport report;
    std::vector<std::vector<Point>> polys;
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) polys.push_back(scene.obstacle_polygon(k));

    for (const auto& seq : canonical_sequences(scene, ginf)) {
        for (std::size_t i = 0; i + 1 < seq.vertices.size(); ++i) {
            ++report.pairs_checked;
            const VertexId a = seq.vertices[i], b = seq.vertices[i + 1];
            const std::vector<Point> tri{scene.vertices[seq.apex], scene.vertices[a], scene.vertices[b]};
            auto flag = [&](std::string why) {
                report.witnesses.push_back({seq.apex, seq.subcone, a, b, std::move(why)});
            };
            for (VertexId w = 0; w < scene.size(); ++w) {
                if (w == seq.apex || w == a || w == b) continue;
                if (point_in_polygon(scene.vertices[w], tri) == Containment::Inside) {
                    flag("vertex " + std::to_string(w) + " inside triangle");
                }
            }
            const Point centroid{(tri[0].x + tri[1].x + tri[2].x) / 3, (tri[0].y + tri[1].y + tri[2].y) / 3};
            for (std::size_t k = 0; k < polys.size(); ++k) {
                const auto& poly = polys[k];
                bool hit = point_in_polygon(centroid, poly) == Containment::Inside;
                for (std::size_t j = 0; j < poly.size() && !hit; ++j) {
                    hit = segment_properly_intersects_polygon({poly[j], poly[(j + 1) % poly.size()]}, tri);
                }
                if (hit) flag("obstacle " + std::to_string(k) + " meets triangle");
            }
        }
    }
    return report;
}

namespace {

// Direction tests written against the boundary rays directly, independent of
// the sector table used by the builders.
struct OracleCone {
    ExactScalar lo_x, lo_y, hi_x, hi_y;  // boundary rays, counterclockwise lo -> hi
    ExactScalar bis_x, bis_y;            // unit bisector
};

const std::array<OracleCone, 3>& oracle_cones() {
    static const std::array<OracleCone, 3> cones = [] {
        const ExactScalar r3 = ExactScalar::sqrt3();
        const Rational half(1, 2);
        return std::array<OracleCone, 3>{{
            {1, r3, -1, r3, 0, 1},                                          // 60..120
            {-1, 0, -1, -r3, -r3 * ExactScalar(half), ExactScalar(-half)},  // 180..240
            {1, -r3, 1, 0, r3 * ExactScalar(half), ExactScalar(-half)},     // 300..360
        }};
    }();
    return cones;
}

bool in_open_cone(const OracleCone& c, const Rational& dx, const Rational& dy) {
    const ExactScalar x(dx), y(dy);
    return (c.lo_x * y - c.lo_y * x).sign() > 0 && (x * c.hi_y - y * c.hi_x).sign() > 0;
}

Rational cross_dir(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

}  // namespace

Graph oracle_g_infinity(const Scene& scene) {
    if (!check_general_position(scene).ok()) {
        throw GeneralPositionError("scene is not in general position");
    }
    const std::size_t n = scene.size();
    std::vector<std::vector<Point>> polys;
    for (std::size_t k = 0; k < scene.obstacles.size(); ++k) polys.push_back(scene.obstacle_polygon(k));

    auto sees = [&](VertexId u, VertexId v) {
        const Segment s{scene.vertices[u], scene.vertices[v]};
        for (VertexId w = 0; w < n; ++w) {
            if (w != u && w != v && on_open_segment(scene.vertices[w], s.p, s.q)) return false;
        }
        return std::none_of(polys.begin(), polys.end(),
                            [&](const auto& poly) { return segment_properly_intersects_polygon(s, poly); });
    };

    // Directions of obstacle edges leaving each vertex.
    std::vector<std::vector<Point>> edge_dirs(n);
    for (const auto& obs : scene.obstacles) {
        for (std::size_t i = 0; i < obs.size(); ++i) {
            const VertexId a = obs[i], b = obs[(i + 1) % obs.size()];
            const Point d{scene.vertices[b].x - scene.vertices[a].x, scene.vertices[b].y - scene.vertices[a].y};
            edge_dirs[a].push_back(d);
            edge_dirs[b].push_back(Point{-d.x, -d.y});
        }
    }
    // Local interior of the obstacle at u, as a (to_next, to_prev) pair.
    std::vector<std::optional<std::pair<Point, Point>>> interior(n);
    for (const auto& obs : scene.obstacles) {
        for (std::size_t i = 0; i < obs.size(); ++i) {
            const VertexId a = obs[(i + obs.size() - 1) % obs.size()], u = obs[i], b = obs[(i + 1) % obs.size()];
            const Point& pu = scene.vertices[u];
            interior[u] = std::pair{Point{scene.vertices[b].x - pu.x, scene.vertices[b].y - pu.y},
                                    Point{scene.vertices[a].x - pu.x, scene.vertices[a].y - pu.y}};
        }
    }
    auto points_inside = [&](VertexId u, const Point& s) {
        if (!interior[u]) return false;
        const auto& [to_next, to_prev] = *interior[u];
        const bool after_next = sgn(cross_dir(to_next, s)) > 0;
        const bool before_prev = sgn(cross_dir(s, to_prev)) > 0;
        if (sgn(cross_dir(to_next, to_prev)) > 0) return after_next && before_prev;
        return after_next || before_prev;
    };
    // v and w share a subcone of u unless the sweep between them meets the
    // obstacle interior: an obstacle edge at u points strictly between them,
    // or the bisecting direction itself points into the obstacle.
    auto separated = [&](VertexId u, const Point& dv, const Point& dw) {
        const int turn = sgn(cross_dir(dv, dw));
        for (const Point& e : edge_dirs[u]) {
            if (sgn(cross_dir(dv, e)) == turn && sgn(cross_dir(e, dw)) == turn) return true;
        }
        // dv and dw are less than pi apart, so any positive combination lies
        // strictly between them.
        return points_inside(u, Point{dv.x + dw.x, dv.y + dw.y});
    };

    Graph g(n);
    for (VertexId u = 0; u < n; ++u) {
        std::vector<VertexId> seen;
        for (VertexId v = 0; v < n; ++v) {
            if (v != u && sees(u, v)) seen.push_back(v);
        }
        for (const OracleCone& cone : oracle_cones()) {
            std::vector<std::pair<VertexId, ExactScalar>> members;
            for (VertexId v : seen) {
                const Rational dx = scene.vertices[v].x - scene.vertices[u].x;
                const Rational dy = scene.vertices[v].y - scene.vertices[u].y;
                if (!in_open_cone(cone, dx, dy)) continue;
                members.emplace_back(v, cone.bis_x * ExactScalar(dx) + cone.bis_y * ExactScalar(dy));
            }
            for (const auto& [v, key] : members) {
                const Point dv{scene.vertices[v].x - scene.vertices[u].x, scene.vertices[v].y - scene.vertices[u].y};
                bool nearest = true;
                for (const auto& [w, other] : members) {
                    if (w == v || !(other < key)) continue;
                    const Point dw{scene.vertices[w].x - scene.vertices[u].x, scene.vertices[w].y - scene.vertices[u].y};
                    if (!separated(u, dv, dw)) {
                        nearest = false;
                        break;
                    }
                }
                if (nearest) g.add_edge(u, v);
            }
        }
    }
    return g;
}

LedgerReport check_ledger(const ChargeLedger& ledger, const Graph& g10) {
    LedgerReport r;
    r.max_negative = ledger.max_negative();
    r.max_positive = ledger.max_positive();
    auto problem = [&](std::string s) {
        r.ok = false;
        r.problems.push_back(std::move(s));
    };
    if (r.max_negative > 1) problem("a negative subcone carries " + std::to_string(r.max_negative) + " charges");
    if (r.max_positive > 2) problem("a positive subcone carries " + std::to_string(r.max_positive) + " charges");

    std::map<std::pair<Edge, VertexId>, std::size_t> per_end;
    for (const auto& [ref, list] : ledger.by_subcone()) {
        for (const Charge& c : list) ++per_end[{c.edge, ref.apex}];
    }
    for (const auto& e : g10.edges()) {
        for (VertexId end : {e.first, e.second}) {
            if (per_end.count({e, end}) == 0) {
                problem("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                        ") is not charged at " + std::to_string(end));
            }
        }
    }
    for (VertexId v = 0; v < g10.vertex_count(); ++v) {
        if (ledger.total_at(v) < g10.degree(v)) {
            problem("vertex " + std::to_string(v) + " has degree " + std::to_string(g10.degree(v)) +
                    " but charge " + std::to_string(ledger.total_at(v)));
        }
    }
    return r;
}

}  // namespace polyspan
