// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "polyspan/cli.hpp"
#include "polyspan/io.hpp"
#include "polyspan/spanners.hpp"
#include "polyspan/verifier.hpp"
#include "polyspan/visibility.hpp"
#include "support.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include <unistd.h>

using namespace polyspan;
namespace fs = std::filesystem;

namespace {

constexpr double kTol = 1e-9;

struct Instance {
    std::string label;
    Scene scene;
    SpannerSet graphs;
};

std::vector<Instance> instance_set() {
    std::vector<Instance> out;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GeneratorConfig c;
        c.n_points = 10 + static_cast<std::size_t>((seed * 17) % 51);
        c.n_obstacles = std::min<std::size_t>(seed % 6, c.n_points / c.obstacle_size);
        c.seed = 1000 + seed;
        Scene s = generate(c);
        out.push_back({"seed " + std::to_string(c.seed), s, build_all(s)});
    }
    for (const auto& name : test_support::fixture_names()) {
        Scene s = test_support::fixture(name);
        out.push_back({name, s, build_all(s)});
    }
    return out;
}

struct Criterion {
    int id;
    std::string title;
    bool passed = true;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        passed = false;
        if (notes.size() < 5) notes.push_back(note);
    }
    void expect(bool cond, const std::string& note) {
        if (!cond) fail(note);
    }
};

bool within(double value, double bound) { return value <= bound * (1 + kTol); }

void oracle_equivalence(Criterion& c, const std::vector<Instance>& set) {
    const auto start = std::chrono::steady_clock::now();
    for (const auto& in : set) {
        const Graph built = build_g_infinity(in.scene);
        c.expect(built == oracle_g_infinity(in.scene), in.label + ": builder and oracle differ");
        c.expect(built == in.graphs.ginf, in.label + ": build_all disagrees with build_g_infinity");
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t << secs << " s";
    c.expect(secs < 60.0, "took " + t.str());
    c.notes.push_back(std::to_string(set.size()) + " instances in " + t.str());
}

void planarity(Criterion& c, const std::vector<Instance>& set) {
    for (const auto& in : set)
        for (const auto& [name, g] : {std::pair{"ginf", &in.graphs.ginf}, std::pair{"g15", &in.graphs.g15},
                                      std::pair{"g10", &in.graphs.g10}, std::pair{"g7", &in.graphs.g7}}) {
            const PlanarityReport r = check_planarity(in.scene, *g);
            c.expect(r.ok(), in.label + ": " + name + " has " + std::to_string(r.crossing_pairs.size()) +
                                 " crossings, " + std::to_string(r.obstacle_conflicts.size()) +
                                 " obstacle conflicts");
        }
}

void degrees(Criterion& c, const std::vector<Instance>& set) {
    for (const auto& in : set) {
        c.expect(degree_report(in.graphs.g15).max_degree <= 15, in.label + ": g15 degree");
        c.expect(degree_report(in.graphs.g10).max_degree <= 10, in.label + ": g10 degree");
        c.expect(degree_report(in.graphs.g7).max_degree <= 7, in.label + ": g7 degree");
        const LedgerReport l = check_ledger(compute_charges(in.scene, in.graphs.ginf, in.graphs.g10), in.graphs.g10);
        c.expect(l.ok && l.max_negative <= 1 && l.max_positive <= 2, in.label + ": charge ledger");
    }
}

void stretch(Criterion& c, const std::vector<Instance>& set) {
    double worst_inf = 0, worst_vs_inf = 0, worst_vs_vis = 0;
    for (const auto& in : set) {
        const double r = stretch_factor(in.scene, in.graphs.ginf, in.graphs.vis).max_ratio;
        worst_inf = std::max(worst_inf, r);
        c.expect(within(r, 2.0), in.label + ": ginf vs vis " + std::to_string(r));
        for (const auto& [name, g] : {std::pair{"g15", &in.graphs.g15}, std::pair{"g10", &in.graphs.g10},
                                      std::pair{"g7", &in.graphs.g7}}) {
            const double a = stretch_factor(in.scene, *g, in.graphs.ginf).max_ratio;
            const double b = stretch_factor(in.scene, *g, in.graphs.vis).max_ratio;
            worst_vs_inf = std::max(worst_vs_inf, a);
            worst_vs_vis = std::max(worst_vs_vis, b);
            c.expect(within(a, 3.0), in.label + ": " + name + " vs ginf " + std::to_string(a));
            c.expect(within(b, 6.0), in.label + ": " + name + " vs vis " + std::to_string(b));
        }
    }
    std::ostringstream t;
    t << "worst ratios: ginf/vis " << worst_inf << ", sub/ginf " << worst_vs_inf << ", sub/vis " << worst_vs_vis;
    c.notes.push_back(t.str());
}

void per_edge(Criterion& c, const std::vector<Instance>& set) {
    c.expect(std::abs(per_edge_bound_factor(0.0) - std::sqrt(3.0)) < kTol, "factor at 0 is not sqrt3");
    c.expect(std::abs(per_edge_bound_factor(std::numbers::pi / 6) - 2.0) < kTol, "factor at pi/6 is not 2");
    for (int i = 0; i <= 1000; ++i)
        c.expect(per_edge_bound_factor(std::numbers::pi / 6 * i / 1000.0) <= 2.0 + kTol, "factor exceeds 2");
    for (const auto& in : set) {
        const EdgeBoundReport r = check_per_edge_bound_ginf(in.scene, in.graphs.ginf, in.graphs.vis, kTol);
        c.expect(r.ok && r.edges_checked == in.graphs.vis.edge_count(), in.label + ": per-edge bound");
    }
}

void structural(Criterion& c, const std::vector<Instance>& set) {
    for (const auto& in : set) {
        c.expect(check_canonical_paths(in.scene, in.graphs.ginf, in.graphs.g15).ok(), in.label + ": canonical paths (g15)");
        c.expect(check_canonical_paths(in.scene, in.graphs.ginf, in.graphs.g10).ok(), in.label + ": canonical paths (g10)");
        c.expect(check_empty_triangles(in.scene, in.graphs.ginf).ok(), in.label + ": empty triangles");
    }
    // Negative controls on the five-neighbour fan: dropping a path edge and
    // dropping a fan edge must both be noticed.
    const Scene s = test_support::fixture("canonical_sequence.json");
    const Graph ginf = build_g_infinity(s);
    Graph g15 = build_g15(s, ginf);
    g15.remove_edge(2, 3);
    c.expect(!check_canonical_paths(s, ginf, g15).ok(), "canonical path check misses a dropped path edge");
    Graph fan = ginf;
    fan.remove_edge(0, 3);
    c.expect(!check_empty_triangles(s, fan).ok(), "empty triangle check misses a hidden vertex");
}

void subgraph_chain(Criterion& c, const std::vector<Instance>& set) {
    for (const auto& in : set) {
        const auto& g = in.graphs;
        c.expect(g.g10.is_subgraph_of(g.g15) && g.g15.is_subgraph_of(g.ginf) && g.ginf.is_subgraph_of(g.vis),
                 in.label + ": chain broken");
        for (const Edge& e : g.g7.edges()) {
            if (g.g10.has_edge(e.first, e.second)) continue;
            const auto sc = std::find_if(g.shortcuts.begin(), g.shortcuts.end(), [&](const Shortcut& s) {
                return !s.absorbed && make_edge(s.x, s.y) == e;
            });
            if (sc == g.shortcuts.end()) {
                c.fail(in.label + ": g7 edge outside g10 is not a shortcut");
                continue;
            }
            const auto& p = in.scene.vertices;
            const std::vector<Point> quad = {p[sc->u], p[sc->x], p[sc->v], p[sc->y]};
            const Point mid{(p[sc->x].x + p[sc->y].x) / 2, (p[sc->x].y + p[sc->y].y) / 2};
            c.expect(point_in_polygon(mid, quad) == Containment::Inside, in.label + ": shortcut leaves its quadrilateral");
        }
    }
}

void micro(Criterion& c) {
    const Scene s = test_support::scene({{0, 0}, {-1, 2}, {1, 3}});
    const Graph ginf = build_g_infinity(s);
    c.expect(ginf.edges() == std::vector<Edge>{{0, 1}, {1, 2}}, "edge set differs");
    const double r = stretch_factor(s, ginf, visibility_graph(s)).max_ratio;
    c.expect(std::abs(r - std::sqrt(2.0)) <= kTol, "stretch " + std::to_string(r));
}

int cli(std::vector<std::string> args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

void end_to_end(Criterion& c) {
    const fs::path dir = fs::temp_directory_path() / ("polyspan_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    for (int seed = 1; seed <= 100; ++seed) {
        const std::string tag = "seed " + std::to_string(seed);
        const std::string inst = (dir / "inst.json").string();
        const int n = 10 + seed % 31;
        const int obstacles = std::min(seed % 4, n / 4);
        if (cli({"gen", "--n", std::to_string(n), "--obstacles", std::to_string(obstacles), "--seed",
                 std::to_string(seed), "--out", inst}) != 0) {
            c.fail(tag + ": gen failed");
            continue;
        }
        std::vector<std::string> verify = {"verify", "--in", inst};
        for (const char* g : {"ginf", "g15", "g10", "g7"}) {
            const std::string edges = (dir / (std::string(g) + ".edges")).string();
            c.expect(cli({"build", "--graph", g, "--in", inst, "--out", edges}) == 0, tag + ": build " + g);
            verify.insert(verify.end(), {"--graph", g, "--edges", edges});
        }
        std::string report;
        c.expect(cli(verify, &report) == 0, tag + ": verify did not pass");
    }
    fs::remove_all(dir);

    const auto manifest =
        nlohmann::json::parse(test_support::read_text(test_support::fixture_path("corrupted/manifest.json")));
    c.expect(!manifest.empty(), "no corrupted fixtures");
    for (const auto& entry : manifest) {
        const std::string expect = entry["expect"];
        std::string report;
        const int code = cli({"verify", "--in", test_support::fixture_path(entry["instance"]), "--graph",
                              entry["graph"], "--edges", test_support::fixture_path(entry["edges"])},
                             &report);
        c.expect(code == 1 && report.find("FAIL " + expect) != std::string::npos,
                 std::string(entry["edges"]) + ": expected exit 1 naming " + expect);
    }
    c.notes.push_back("100 seeds, " + std::to_string(manifest.size()) + " corrupted edge lists");
}

}  // namespace

int main() {
    std::vector<Instance> set;
    try {
        set = instance_set();
    } catch (const std::exception& e) {
        std::cout << "FAIL instance generation: " << e.what() << '\n';
        return 1;
    }

    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> criteria = {
        {{1, "oracle equivalence of G-infinity"}, [&](Criterion& c) { oracle_equivalence(c, set); }},
        {{2, "planarity of G-infinity, G15, G10, G7"}, [&](Criterion& c) { planarity(c, set); }},
        {{3, "degree bounds and charge ledger"}, [&](Criterion& c) { degrees(c, set); }},
        {{4, "spanning ratios"}, [&](Criterion& c) { stretch(c, set); }},
        {{5, "per-edge path bound"}, [&](Criterion& c) { per_edge(c, set); }},
        {{6, "canonical paths and empty triangles"}, [&](Criterion& c) { structural(c, set); }},
        {{7, "subgraph chain and G7 shortcuts"}, [&](Criterion& c) { subgraph_chain(c, set); }},
        {{8, "three-point micro instance"}, [&](Criterion& c) { micro(c); }},
        {{9, "end-to-end CLI"}, [&](Criterion& c) { end_to_end(c); }},
    };

    bool all = true;
    for (auto& [c, body] : criteria) {
        try {
            body(c);
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        all = all && c.passed;
        std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
        for (const auto& note : c.notes) std::cout << "    " << note << '\n';
    }
    return all ? 0 : 1;
}
