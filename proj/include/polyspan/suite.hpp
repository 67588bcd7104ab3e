#pragma once

#include "polyspan/graph.hpp"
#include "polyspan/scene.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyspan {

enum class GraphKind { Vis, GInf, G15, G10, G7 };

const char* to_string(GraphKind kind);
/// "vis", "ginf", "g15", "g10" or "g7"; nullopt otherwise.
std::optional<GraphKind> parse_graph_kind(std::string_view name);

Graph build_graph(const Scene& scene, GraphKind kind);

struct CheckResult {
    std::string name;  // e.g. "planarity(g7)", "stretch(g10 vs vis<=6)"
    bool passed = true;
    std::vector<std::string> witnesses;
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool ok() const;
    const CheckResult* find(std::string_view name) const;
    std::vector<std::string> failed() const;
    /// One "PASS name" / "FAIL name" line per check, up to five witnesses
    /// under each failure.
    std::string text() const;
};

/// Graphs that replace the constructed ones inside run_suite. The rest of
/// the suite still runs against freshly built graphs.
struct GraphOverrides {
    std::optional<Graph> vis, ginf, g15, g10, g7;

    std::optional<Graph>& slot(GraphKind kind);
};

/// Every property check on one scene: exact planarity, degree bounds, charge
/// ledger, stretch factors, the per-edge bound, canonical paths, empty
/// triangles, oracle equivalence and the subgraph chain. Exceptions from a
/// check count as its failure. Throws std::invalid_argument when an override
/// has the wrong vertex count.
SuiteReport run_suite(const Scene& scene, const GraphOverrides& overrides = {});

}  // namespace polyspan
