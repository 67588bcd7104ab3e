#pragma once

#include "polyspan/cones.hpp"
#include "polyspan/graph.hpp"
#include "polyspan/scene.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyspan {

/// Raised when a construction reaches a state its invariants rule out.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Graph edges incident to one apex that fall in one subcone.
struct ConeNeighbors {
    SubconeRef ref;
    std::vector<VertexId> ccw;       // counterclockwise around the apex
    std::vector<ExactScalar> keys;   // projection_key of each entry of ccw
    std::size_t closest = 0;         // index into ccw of the minimal key
};

/// Every edge of a graph, classified into the subcone it occupies at each of
/// its endpoints.
class ConeEdgeIndex {
public:
    ConeEdgeIndex(const Scene& scene, const Graph& graph);

    const std::vector<ConeNeighbors>& at(VertexId apex) const { return per_vertex_.at(apex); }
    const ConeNeighbors* find(const SubconeRef& ref) const;
    const ApexFrame& frame(VertexId apex) const { return frames_.at(apex); }
    SubconeRef classify(VertexId apex, VertexId p) const;

private:
    const Scene* scene_;
    std::vector<ApexFrame> frames_;
    std::vector<std::vector<ConeNeighbors>> per_vertex_;
};

std::vector<ApexFrame> make_frames(const Scene& scene);

/// Polygon-constrained half-theta-6 graph: in each positive subcone of each
/// vertex, an edge to the visible vertex with the smallest projection on the
/// cone bisector. Throws GeneralPositionError unless the scene is in
/// general position.
Graph build_g_infinity(const Scene& scene);
Graph build_g_infinity(const Scene& scene, const Graph& visibility);

struct CanonicalSequence {
    VertexId apex = 0;
    SubconeRef subcone;
    std::vector<VertexId> vertices;  // counterclockwise
};

/// G-infinity neighbours of apex inside a negative subcone, counterclockwise.
/// Throws std::invalid_argument for a positive subcone.
CanonicalSequence canonical_sequence(const Scene& scene, const Graph& ginf, VertexId apex,
                                     const SubconeRef& subcone);

/// Every non-empty canonical sequence of the graph.
std::vector<CanonicalSequence> canonical_sequences(const Scene& scene, const Graph& ginf);

/// Keeps, per negative subcone, the clockwise-most, counterclockwise-most and
/// closest edge.
Graph build_g15(const Scene& scene, const Graph& ginf);

/// Keeps, per negative subcone, the closest edge and the canonical path.
Graph build_g10(const Scene& scene, const Graph& ginf);

enum class Scenario { A, B, C, D };

const char* to_string(Scenario s);

struct Charge {
    Edge edge;
    Scenario scenario;
    SubconeRef target;   // subcone the edge is charged to
    VertexId origin;     // apex of the negative subcone that kept the edge
};

/// Charges of G10 edges to subcones. An edge that is both the closest edge
/// and a canonical-path edge at the same endpoint appears twice there.
class ChargeLedger {
public:
    void add(const Charge& charge);

    const std::map<SubconeRef, std::vector<Charge>>& by_subcone() const { return by_subcone_; }
    std::vector<Charge> charges_at(VertexId v) const;
    std::size_t total_at(VertexId v) const;
    /// Largest charge count over negative (resp. positive) subcones.
    std::size_t max_negative() const;
    std::size_t max_positive() const;
    std::size_t size() const;

private:
    std::map<SubconeRef, std::vector<Charge>> by_subcone_;
};

ChargeLedger compute_charges(const Scene& scene, const Graph& ginf, const Graph& g10);
ChargeLedger compute_charges(const Scene& scene, const Graph& g10);

/// One doubly charged positive cone found while turning G10 into G7.
struct Shortcut {
    VertexId u = 0;     // apex whose canonical path carries x, v, y
    SubconeRef path;    // the negative subcone of u
    VertexId v = 0;
    VertexId x = 0;     // neighbour of v nearer the closest vertex of u
    VertexId y = 0;
    bool absorbed = false;                 // x or y closest at v: graph unchanged
    std::optional<VertexId> w;             // x's neighbour on v's canonical path
    bool removed_xw = false;
};

struct G7Result {
    Graph graph;
    std::vector<Shortcut> shortcuts;  // applied and absorbed, in application order
};

/// Scans doubly charged positive cones by vertex index and applies the
/// shortcut (drop (v,y), add (x,y), maybe drop (x,w)) against the current
/// graph, so earlier applications are seen by later ones.
G7Result build_g7_detailed(const Scene& scene, const Graph& ginf, const Graph& g10);
Graph build_g7(const Scene& scene, const Graph& ginf, const Graph& g10);

struct SpannerSet {
    Graph vis;
    Graph ginf;
    Graph g15;
    Graph g10;
    Graph g7;
    std::vector<Shortcut> shortcuts;
};

SpannerSet build_all(const Scene& scene);

}  // namespace polyspan
