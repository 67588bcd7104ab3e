#include "polyspan/spanners.hpp"

#include "polyspan/visibility.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace polyspan {

std::vector<ApexFrame> make_frames(const Scene& scene) {
    const auto inc = incidence(scene);
    std::vector<ApexFrame> frames;
    frames.reserve(scene.size());
    for (VertexId v = 0; v < scene.size(); ++v) frames.emplace_back(scene, v, inc[v]);
    return frames;
}

namespace {

void sort_counterclockwise(const Scene& scene, VertexId apex, ConeNeighbors& cone) {
    const Point& o = scene.vertices[apex];
    std::vector<std::size_t> order(cone.ccw.size());
    std::iota(order.begin(), order.end(), 0);
    // A subcone spans less than 180 degrees, so orientation is a strict order.
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return orient(o, scene.vertices[cone.ccw[i]], scene.vertices[cone.ccw[j]]) ==
               Orientation::CCW;
    });
    ConeNeighbors sorted{cone.ref, {}, {}, 0};
    for (std::size_t i : order) {
        sorted.ccw.push_back(cone.ccw[i]);
        sorted.keys.push_back(cone.keys[i]);
    }
    for (std::size_t i = 1; i < sorted.keys.size(); ++i) {
        if (sorted.keys[i] < sorted.keys[sorted.closest]) sorted.closest = i;
    }
    cone = std::move(sorted);
}

}  // namespace

ConeEdgeIndex::ConeEdgeIndex(const Scene& scene, const Graph& graph)
    : scene_(&scene), frames_(make_frames(scene)), per_vertex_(scene.size()) {
    if (graph.vertex_count() != scene.size()) {
        throw std::invalid_argument("graph and scene disagree on the vertex count");
    }
    for (VertexId u = 0; u < scene.size(); ++u) {
        std::map<SubconeRef, ConeNeighbors> cones;
        for (VertexId v : graph.neighbors(u)) {
            const SubconeRef ref = frames_[u].classify(scene.vertices[v]);
            auto& entry = cones[ref];
            entry.ref = ref;
            entry.ccw.push_back(v);
            entry.keys.push_back(projection_key(scene.vertices[u], ref.label, scene.vertices[v]));
        }
        for (auto& [ref, cone] : cones) {
            sort_counterclockwise(scene, u, cone);
            per_vertex_[u].push_back(std::move(cone));
        }
    }
}

const ConeNeighbors* ConeEdgeIndex::find(const SubconeRef& ref) const {
    for (const auto& cone : per_vertex_.at(ref.apex)) {
        if (cone.ref == ref) return &cone;
    }
    return nullptr;
}

SubconeRef ConeEdgeIndex::classify(VertexId apex, VertexId p) const {
    return frames_.at(apex).classify(scene_->vertices.at(p));
}

Graph build_g_infinity(const Scene& scene) {
    return build_g_infinity(scene, visibility_graph(scene));
}

Graph build_g_infinity(const Scene& scene, const Graph& vis) {
    if (const auto gp = check_general_position(scene); !gp.ok()) {
        throw GeneralPositionError("scene is not in general position:\n" + gp.summary());
    }
    const auto frames = make_frames(scene);
    Graph g(scene.size());
    for (VertexId u = 0; u < scene.size(); ++u) {
        std::map<SubconeRef, std::pair<VertexId, ExactScalar>> best;
        for (VertexId v : vis.neighbors(u)) {
            const SubconeRef ref = frames[u].classify(scene.vertices[v]);
            if (!ref.label.positive()) continue;
            ExactScalar key = projection_key(scene.vertices[u], ref.label, scene.vertices[v]);
            auto it = best.find(ref);
            if (it == best.end()) {
                best.emplace(ref, std::make_pair(v, std::move(key)));
            } else if (key < it->second.second) {
                it->second = {v, std::move(key)};
            }
        }
        for (const auto& [ref, choice] : best) g.add_edge(u, choice.first);
    }
    return g;
}

CanonicalSequence canonical_sequence(const Scene& scene, const Graph& ginf, VertexId apex,
                                     const SubconeRef& subcone) {
    if (subcone.label.positive()) {
        throw std::invalid_argument("canonical sequences live in negative subcones");
    }
    const auto inc = incidence(scene);
    const ApexFrame frame(scene, apex, inc.at(apex));
    ConeNeighbors cone{subcone, {}, {}, 0};
    for (VertexId v : ginf.neighbors(apex)) {
        if (frame.classify(scene.vertices[v]) != SubconeRef{apex, subcone.label, subcone.side}) continue;
        cone.ccw.push_back(v);
        cone.keys.push_back(projection_key(scene.vertices[apex], subcone.label, scene.vertices[v]));
    }
    sort_counterclockwise(scene, apex, cone);
    return CanonicalSequence{apex, subcone, std::move(cone.ccw)};
}

std::vector<CanonicalSequence> canonical_sequences(const Scene& scene, const Graph& ginf) {
    const ConeEdgeIndex index(scene, ginf);
    std::vector<CanonicalSequence> out;
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (const auto& cone : index.at(u)) {
            if (!cone.ref.label.positive()) out.push_back({u, cone.ref, cone.ccw});
        }
    }
    return out;
}

Graph build_g15(const Scene& scene, const Graph& ginf) {
    const ConeEdgeIndex index(scene, ginf);
    Graph g(scene.size());
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (const auto& cone : index.at(u)) {
            if (cone.ref.label.positive() || cone.ccw.empty()) continue;
            g.add_edge(u, cone.ccw.front());
            g.add_edge(u, cone.ccw.back());
            g.add_edge(u, cone.ccw[cone.closest]);
        }
    }
    return g;
}

Graph build_g10(const Scene& scene, const Graph& ginf) {
    const ConeEdgeIndex index(scene, ginf);
    Graph g(scene.size());
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (const auto& cone : index.at(u)) {
            if (cone.ref.label.positive() || cone.ccw.empty()) continue;
            g.add_edge(u, cone.ccw[cone.closest]);
            for (std::size_t i = 0; i + 1 < cone.ccw.size(); ++i) g.add_edge(cone.ccw[i], cone.ccw[i + 1]);
        }
    }
    return g;
}

const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::A: return "A";
        case Scenario::B: return "B";
        case Scenario::C: return "C";
        case Scenario::D: return "D";
    }
    return "?";
}

void ChargeLedger::add(const Charge& charge) {
    auto& list = by_subcone_[charge.target];
    const bool duplicate = std::any_of(list.begin(), list.end(), [&](const Charge& c) {
        return c.edge == charge.edge && c.scenario == charge.scenario;
    });
    if (!duplicate) list.push_back(charge);
}

std::vector<Charge> ChargeLedger::charges_at(VertexId v) const {
    std::vector<Charge> out;
    for (const auto& [ref, list] : by_subcone_) {
        if (ref.apex == v) out.insert(out.end(), list.begin(), list.end());
    }
    return out;
}

std::size_t ChargeLedger::total_at(VertexId v) const { return charges_at(v).size(); }

std::size_t ChargeLedger::max_negative() const {
    std::size_t m = 0;
    for (const auto& [ref, list] : by_subcone_) {
        if (!ref.label.positive()) m = std::max(m, list.size());
    }
    return m;
}

std::size_t ChargeLedger::max_positive() const {
    std::size_t m = 0;
    for (const auto& [ref, list] : by_subcone_) {
        if (ref.label.positive()) m = std::max(m, list.size());
    }
    return m;
}

std::size_t ChargeLedger::size() const {
    std::size_t n = 0;
    for (const auto& [ref, list] : by_subcone_) n += list.size();
    return n;
}

namespace {

// Charge for canonical-path edge (p, q) at p, where u is the apex of the path.
Charge path_charge(const ConeEdgeIndex& index, VertexId u, VertexId p, VertexId q) {
    const SubconeRef toward_u = index.classify(p, u);
    const SubconeRef toward_q = index.classify(p, q);
    const Edge e = make_edge(p, q);
    if (!toward_u.label.positive()) {
        throw InvariantError("path apex " + std::to_string(u) + " is in a negative cone of " +
                             std::to_string(p));
    }
    const int home = toward_u.label.sector();
    const int qs = toward_q.label.sector();
    if (!toward_q.label.positive()) {
        if (qs == (home + 1) % 6 || qs == (home + 5) % 6) return Charge{e, Scenario::C, toward_u, u};
    } else if (qs == (home + 2) % 6 || qs == (home + 4) % 6) {
        // The negative cone between the cone holding u and the one holding q.
        const int between = qs == (home + 2) % 6 ? (home + 1) % 6 : (home + 5) % 6;
        const ConeLabel label = ConeLabel::from_sector(between);
        Side side = Side::Whole;
        if (index.frame(p).split_cone() == label) side = qs == (between + 1) % 6 ? Side::Left : Side::Right;
        return Charge{e, Scenario::D, SubconeRef{p, label, side}, u};
    }
    throw InvariantError("canonical-path edge (" + std::to_string(p) + ", " + std::to_string(q) +
                         ") of apex " + std::to_string(u) + " cannot be charged at " +
                         std::to_string(p));
}

}  // namespace

ChargeLedger compute_charges(const Scene& scene, const Graph& ginf, const Graph& g10) {
    const ConeEdgeIndex index(scene, ginf);
    ChargeLedger ledger;
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (const auto& cone : index.at(u)) {
            if (cone.ref.label.positive() || cone.ccw.empty()) continue;
            const VertexId closest = cone.ccw[cone.closest];
            if (g10.has_edge(u, closest)) {
                ledger.add({make_edge(u, closest), Scenario::B, cone.ref, u});
                ledger.add({make_edge(u, closest), Scenario::A, index.classify(closest, u), u});
            }
            for (std::size_t i = 0; i + 1 < cone.ccw.size(); ++i) {
                const VertexId p = cone.ccw[i], q = cone.ccw[i + 1];
                if (!g10.has_edge(p, q)) continue;
                ledger.add(path_charge(index, u, p, q));
                ledger.add(path_charge(index, u, q, p));
            }
        }
    }
    return ledger;
}

ChargeLedger compute_charges(const Scene& scene, const Graph& g10) {
    return compute_charges(scene, build_g_infinity(scene), g10);
}

G7Result build_g7_detailed(const Scene& scene, const Graph& ginf, const Graph& g10) {
    const ConeEdgeIndex index(scene, ginf);

    struct Event {
        VertexId v;
        VertexId u;
        const ConeNeighbors* path;
        std::size_t k;
    };
    std::vector<Event> events;
    for (VertexId u = 0; u < scene.size(); ++u) {
        for (const auto& cone : index.at(u)) {
            if (cone.ref.label.positive()) continue;
            for (std::size_t k = 1; k + 1 < cone.ccw.size(); ++k) {
                const VertexId v = cone.ccw[k];
                if (!index.classify(v, cone.ccw[k - 1]).label.positive() &&
                    !index.classify(v, cone.ccw[k + 1]).label.positive()) {
                    events.push_back({v, u, &cone, k});
                }
            }
        }
    }
    std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        return std::tie(a.v, a.u) < std::tie(b.v, b.u);
    });

    auto is_closest = [&](VertexId apex, VertexId p) {
        const ConeNeighbors* cone = index.find(index.classify(apex, p));
        return cone != nullptr && cone->ccw[cone->closest] == p;
    };

    G7Result result{g10, {}};
    Graph& g = result.graph;
    for (const Event& ev : events) {
        const auto& seq = ev.path->ccw;
        const VertexId before = seq[ev.k - 1], after = seq[ev.k + 1];
        if (!g.has_edge(before, ev.v) || !g.has_edge(ev.v, after)) continue;

        Shortcut sc;
        sc.u = ev.u;
        sc.path = ev.path->ref;
        sc.v = ev.v;
        const bool before_is_near = ev.k >= ev.path->closest;
        sc.x = before_is_near ? before : after;
        sc.y = before_is_near ? after : before;

        if (is_closest(sc.v, sc.x) || is_closest(sc.v, sc.y)) {
            sc.absorbed = true;
            result.shortcuts.push_back(sc);
            continue;
        }
        g.remove_edge(sc.v, sc.y);
        g.add_edge(sc.x, sc.y);

        // x's neighbour on the canonical path of v that contains x.
        const int doubled_index = index.classify(sc.v, sc.u).label.index;
        if (const ConeNeighbors* vpath = index.find(index.classify(sc.v, sc.x))) {
            const auto& vs = vpath->ccw;
            const std::size_t pos = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), sc.x) - vs.begin());
            if (pos < vs.size()) {
                std::optional<VertexId> w;
                const bool has_prev = pos > 0, has_next = pos + 1 < vs.size();
                if (has_prev && has_next) w = pos > vpath->closest ? vs[pos - 1] : vs[pos + 1];
                else if (has_prev) w = vs[pos - 1];
                else if (has_next) w = vs[pos + 1];
                if (w) {
                    sc.w = w;
                    const SubconeRef wref = index.classify(sc.x, *w);
                    if (!wref.label.positive() && wref.label.index == doubled_index &&
                        !is_closest(sc.x, *w) && g.has_edge(sc.x, *w)) {
                        g.remove_edge(sc.x, *w);
                        sc.removed_xw = true;
                    }
                }
            }
        }
        result.shortcuts.push_back(sc);
    }
    return result;
}

Graph build_g7(const Scene& scene, const Graph& ginf, const Graph& g10) {
    return build_g7_detailed(scene, ginf, g10).graph;
}

SpannerSet build_all(const Scene& scene) {
    SpannerSet s;
    s.vis = visibility_graph(scene);
    s.ginf = build_g_infinity(scene, s.vis);
    s.g15 = build_g15(scene, s.ginf);
    s.g10 = build_g10(scene, s.ginf);
    G7Result g7 = build_g7_detailed(scene, s.ginf, s.g10);
    s.g7 = std::move(g7.graph);
    s.shortcuts = std::move(g7.shortcuts);
    return s;
}

}  // namespace polyspan
