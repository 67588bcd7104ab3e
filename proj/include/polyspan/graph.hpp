#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace polyspan {

using Edge = std::pair<std::size_t, std::size_t>;

/// Normalized (min, max) form of an undirected edge.
inline Edge make_edge(std::size_t u, std::size_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }

    /// Returns false if the edge already existed. Throws std::invalid_argument
    /// on self-loops or out-of-range endpoints.
    bool add_edge(std::size_t u, std::size_t v);
    bool remove_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    const std::set<std::size_t>& neighbors(std::size_t u) const { return adj_.at(u); }
    std::size_t degree(std::size_t u) const { return adj_.at(u).size(); }

    /// All edges as sorted (min, max) pairs.
    std::vector<Edge> edges() const;

    bool is_subgraph_of(const Graph& other) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::set<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

}  // namespace polyspan
