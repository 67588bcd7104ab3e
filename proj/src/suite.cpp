#include "polyspan/suite.hpp"

#include "polyspan/spanners.hpp"
#include "polyspan/verifier.hpp"
#include "polyspan/visibility.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyspan {

const char* to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::Vis: return "vis";
        case GraphKind::GInf: return "ginf";
        case GraphKind::G15: return "g15";
        case GraphKind::G10: return "g10";
        case GraphKind::G7: return "g7";
    }
    return "?";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
    for (GraphKind k : {GraphKind::Vis, GraphKind::GInf, GraphKind::G15, GraphKind::G10, GraphKind::G7})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

Graph build_graph(const Scene& scene, GraphKind kind) {
    if (kind == GraphKind::Vis) return visibility_graph(scene);
    const Graph vis = visibility_graph(scene);
    const Graph ginf = build_g_infinity(scene, vis);
    switch (kind) {
        case GraphKind::GInf: return ginf;
        case GraphKind::G15: return build_g15(scene, ginf);
        case GraphKind::G10: return build_g10(scene, ginf);
        case GraphKind::G7: return build_g7(scene, ginf, build_g10(scene, ginf));
        case GraphKind::Vis: break;
    }
    return vis;
}

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* SuiteReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::string> SuiteReport::failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

std::string SuiteReport::text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
        const std::size_t shown = std::min<std::size_t>(c.witnesses.size(), 5);
        for (std::size_t i = 0; i < shown; ++i) out << "    " << c.witnesses[i] << '\n';
        if (c.witnesses.size() > shown) out << "    ... " << c.witnesses.size() - shown << " more\n";
    }
    return out.str();
}

std::optional<Graph>& GraphOverrides::slot(GraphKind kind) {
    switch (kind) {
        case GraphKind::Vis: return vis;
        case GraphKind::GInf: return ginf;
        case GraphKind::G15: return g15;
        case GraphKind::G10: return g10;
        case GraphKind::G7: return g7;
    }
    throw std::invalid_argument("unknown graph kind");
}

namespace {

constexpr double kRelTol = 1e-9;

std::string edge_text(const Edge& e) {
    return "(" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")";
}

void diff_witnesses(const Graph& expected, const Graph& actual, std::vector<std::string>& out) {
    for (const auto& e : expected.edges())
        if (!actual.has_edge(e.first, e.second)) out.push_back("missing edge " + edge_text(e));
    for (const auto& e : actual.edges())
        if (!expected.has_edge(e.first, e.second)) out.push_back("unexpected edge " + edge_text(e));
}

void subset_witnesses(const Graph& sub, const Graph& super, const std::string& what,
                      std::vector<std::string>& out) {
    for (const auto& e : sub.edges())
        if (!super.has_edge(e.first, e.second)) out.push_back("edge " + edge_text(e) + " " + what);
}

}  // namespace

SuiteReport run_suite(const Scene& scene, const GraphOverrides& overrides) {
    for (const auto* o : {&overrides.vis, &overrides.ginf, &overrides.g15, &overrides.g10, &overrides.g7})
        if (*o && (*o)->vertex_count() != scene.size())
            throw std::invalid_argument("graph has " + std::to_string((*o)->vertex_count()) +
                                        " vertices, scene has " + std::to_string(scene.size()));

    const SpannerSet built = build_all(scene);
    const Graph& vis = overrides.vis ? *overrides.vis : built.vis;
    const Graph& ginf = overrides.ginf ? *overrides.ginf : built.ginf;
    const Graph& g15 = overrides.g15 ? *overrides.g15 : built.g15;
    const Graph& g10 = overrides.g10 ? *overrides.g10 : built.g10;
    const Graph& g7 = overrides.g7 ? *overrides.g7 : built.g7;

    SuiteReport report;
    auto run = [&](std::string name, const std::function<void(CheckResult&)>& body) {
        CheckResult r;
        r.name = std::move(name);
        try {
            body(r);
        } catch (const std::exception& e) {
            r.witnesses.push_back(std::string("exception: ") + e.what());
        }
        r.passed = r.witnesses.empty();
        report.checks.push_back(std::move(r));
    };

    if (overrides.vis) {
        run("visibility(vis)", [&](CheckResult& r) { diff_witnesses(built.vis, vis, r.witnesses); });
    }
    run("oracle-equivalence(ginf)",
        [&](CheckResult& r) { diff_witnesses(oracle_g_infinity(scene), ginf, r.witnesses); });

    const std::vector<std::pair<const char*, const Graph*>> spanners = {
        {"ginf", &ginf}, {"g15", &g15}, {"g10", &g10}, {"g7", &g7}};
    for (const auto& [name, g] : spanners) {
        run(std::string("planarity(") + name + ")", [&, g = g](CheckResult& r) {
            const PlanarityReport p = check_planarity(scene, *g);
            for (const auto& [a, b] : p.crossing_pairs)
                r.witnesses.push_back("edges " + edge_text(a) + " and " + edge_text(b) + " cross");
            for (const auto& [e, k] : p.obstacle_conflicts)
                r.witnesses.push_back("edge " + edge_text(e) + " passes through obstacle " +
                                      std::to_string(k));
        });
    }

    const std::vector<std::tuple<const char*, const Graph*, std::size_t>> bounded = {
        {"g15", &g15, 15}, {"g10", &g10, 10}, {"g7", &g7, 7}};
    for (const auto& [name, g, cap] : bounded) {
        run(std::string("degree-bound(") + name + "<=" + std::to_string(cap) + ")",
            [&, g = g, cap = cap](CheckResult& r) {
                for (VertexId v = 0; v < g->vertex_count(); ++v)
                    if (g->degree(v) > cap)
                        r.witnesses.push_back("vertex " + std::to_string(v) + " has degree " +
                                              std::to_string(g->degree(v)));
            });
    }

    run("charge-ledger", [&](CheckResult& r) {
        const LedgerReport lr = check_ledger(compute_charges(scene, ginf, g10), g10);
        r.witnesses = lr.problems;
    });

    auto stretch = [&](const char* sub_name, const Graph& sub, const char* base_name, const Graph& base,
                       double bound) {
        std::ostringstream name;
        name << "stretch(" << sub_name << " vs " << base_name << "<=" << bound << ")";
        run(name.str(), [&, bound](CheckResult& r) {
            const StretchReport s = stretch_factor(scene, sub, base);
            if (!(s.max_ratio <= bound * (1.0 + kRelTol))) {
                std::ostringstream w;
                w.precision(12);
                w << "ratio " << s.max_ratio;
                if (s.witness_pair)
                    w << " between " << s.witness_pair->first << " and " << s.witness_pair->second;
                r.witnesses.push_back(w.str());
            }
        });
    };
    stretch("ginf", ginf, "vis", vis, 2.0);
    for (const auto& [name, g] : {std::pair{"g15", &g15}, std::pair{"g10", &g10}, std::pair{"g7", &g7}}) {
        stretch(name, *g, "ginf", ginf, 3.0);
        stretch(name, *g, "vis", vis, 6.0);
    }

    run("per-edge-bound(ginf)", [&](CheckResult& r) {
        const EdgeBoundReport eb = check_per_edge_bound_ginf(scene, ginf, vis, kRelTol);
        for (const auto& w : eb.witnesses) {
            std::ostringstream s;
            s.precision(12);
            s << "edge (" << w.u << ", " << w.v << "): path " << w.path_length << " > bound " << w.bound;
            r.witnesses.push_back(s.str());
        }
    });

    for (const auto& [name, g] : {std::pair{"ginf", &ginf}, std::pair{"g15", &g15}, std::pair{"g10", &g10}}) {
        run(std::string("canonical-paths(") + name + ")", [&, g = g](CheckResult& r) {
            for (const auto& w : check_canonical_paths(scene, ginf, *g).witnesses)
                r.witnesses.push_back(to_string(w.subcone) + ": " + w.reason + " " +
                                      edge_text(make_edge(w.a, w.b)));
        });
    }

    run("empty-triangles(ginf)", [&](CheckResult& r) {
        for (const auto& w : check_empty_triangles(scene, ginf).witnesses)
            r.witnesses.push_back(to_string(w.subcone) + " over " + edge_text(make_edge(w.a, w.b)) +
                                  ": " + w.reason);
    });

    run("subgraph-chain", [&](CheckResult& r) {
        subset_witnesses(g10, g15, "of g10 is not in g15", r.witnesses);
        subset_witnesses(g15, ginf, "of g15 is not in ginf", r.witnesses);
        subset_witnesses(ginf, vis, "of ginf is not in vis", r.witnesses);
        std::set<Edge> added;
        for (const auto& sc : built.shortcuts)
            if (!sc.absorbed) added.insert(make_edge(sc.x, sc.y));
        for (const auto& e : g7.edges())
            if (!g10.has_edge(e.first, e.second) && !added.count(e))
                r.witnesses.push_back("edge " + edge_text(e) + " of g7 is neither in g10 nor a shortcut");
    });

    return report;
}

}  // namespace polyspan
