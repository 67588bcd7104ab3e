#pragma once

#include "polyspan/graph.hpp"
#include "polyspan/scene.hpp"
#include "polyspan/spanners.hpp"

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyspan {

struct PlanarityReport {
    std::vector<std::pair<Edge, Edge>> crossing_pairs;
    std::vector<std::pair<Edge, std::size_t>> obstacle_conflicts;  // (edge, obstacle)

    bool ok() const { return crossing_pairs.empty() && obstacle_conflicts.empty(); }
};

/// Exhaustive exact pairwise test of edges against edges and obstacles.
PlanarityReport check_planarity(const Scene& scene, const Graph& g);

struct DegreeReport {
    std::size_t max_degree = 0;
    std::vector<std::size_t> histogram;  // histogram[d] = vertices of degree d
};

DegreeReport degree_report(const Graph& g);

struct PairRatio {
    VertexId x;
    VertexId y;
    double ratio;
};

struct StretchReport {
    double max_ratio = 1.0;
    std::optional<std::pair<VertexId, VertexId>> witness_pair;
    std::vector<PairRatio> per_pair;  // filled only on request
};

/// Max over pairs connected in base of d_sub / d_base under Euclidean edge
/// weights; infinity when such a pair is disconnected in sub. Throws
/// std::invalid_argument on a vertex-count mismatch.
StretchReport stretch_factor(const Scene& scene, const Graph& sub, const Graph& base,
                             bool keep_pairs = false);

/// Single-source Euclidean shortest path lengths.
std::vector<double> shortest_paths(const Scene& scene, const Graph& g, VertexId source);

/// Path-length bound for a visibility edge (u, v) with v in a positive cone
/// of u, as a multiple of |uv|: sqrt3 * cos(theta) + sin(theta), where theta
/// is the angle between uv and the cone bisector.
double per_edge_bound_factor(double theta);

struct EdgeBoundWitness {
    VertexId u;
    VertexId v;
    double path_length;
    double bound;
};

struct EdgeBoundReport {
    bool ok = true;
    std::size_t edges_checked = 0;
    double worst_ratio = 0.0;  // max path_length / bound
    std::vector<EdgeBoundWitness> witnesses;
};

/// For every visibility edge, oriented so v lies in a positive cone of u,
/// checks d_ginf(u, v) <= bound * |uv| within a relative tolerance.
EdgeBoundReport check_per_edge_bound_ginf(const Scene& scene, const Graph& ginf,
                                          const Graph& visibility, double rel_tol = 1e-9);
EdgeBoundReport check_per_edge_bound_ginf(const Scene& scene, const Graph& ginf,
                                          double rel_tol = 1e-9);

struct PathWitness {
    VertexId apex;
    SubconeRef subcone;
    VertexId a;
    VertexId b;
    std::string reason;
};

struct StructuralReport {
    std::vector<PathWitness> witnesses;
    std::size_t pairs_checked = 0;

    bool ok() const { return witnesses.empty(); }
};

/// Every consecutive pair of every canonical sequence of ginf is an edge of g.
StructuralReport check_canonical_paths(const Scene& scene, const Graph& ginf, const Graph& g);

/// Every triangle (apex, v_i, v_{i+1}) over consecutive canonical vertices
/// has no vertex in its interior and meets no obstacle interior.
StructuralReport check_empty_triangles(const Scene& scene, const Graph& ginf);

/// Brute-force restatement of the G-infinity rule, sharing only the exact
/// predicates with the builder.
Graph oracle_g_infinity(const Scene& scene);

struct LedgerReport {
    bool ok = true;
    std::size_t max_negative = 0;
    std::size_t max_positive = 0;
    std::vector<std::string> problems;
};

/// charge(v) >= deg(v), every edge charged at both ends, at most one charge
/// per negative subcone and two per positive subcone.
LedgerReport check_ledger(const ChargeLedger& ledger, const Graph& g10);

}  // namespace polyspan
