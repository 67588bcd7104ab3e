#include "polyspan/graph.hpp"

#include <stdexcept>
#include <string>

namespace polyspan {

bool Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (u >= adj_.size() || v >= adj_.size()) {
        throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                    ") out of range for " + std::to_string(adj_.size()) +
                                    " vertices");
    }
    if (!adj_[u].insert(v).second) return false;
    adj_[v].insert(u);
    ++edges_;
    return true;
}

bool Graph::remove_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    if (adj_[u].erase(v) == 0) return false;
    adj_[v].erase(u);
    --edges_;
    return true;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    return u < adj_.size() && adj_[u].count(v) > 0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (std::size_t v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (other.vertex_count() != vertex_count()) return false;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
        for (std::size_t v : adj_[u]) {
            if (!other.has_edge(u, v)) return false;
        }
    }
    return true;
}

}  // namespace polyspan
