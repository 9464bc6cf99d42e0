#ifndef STARB_GRAPH_HPP
#define STARB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace starb {

using VertexId = int;

/// Finite simple undirected graph with dense 0..n-1 vertex ids.
/// Immutable after construction; safe to share across threads read-only.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) are merged; self-loops and out-of-range endpoints throw
    /// std::invalid_argument.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return matrix_[static_cast<size_t>(u) * n_ + v] != 0; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// BFS distances from v; -1 marks unreachable vertices.
    std::vector<int> distances_from(int v) const;

    /// Shortest-path hop count, or nullopt when u and v are disconnected.
    std::optional<int> distance(int u, int v) const;

    /// All vertices at distance <= r from v (includes v), ascending ids.
    std::vector<int> ball(int v, int r) const;

    /// Length of a shortest cycle through v, or nullopt when v lies on none.
    std::optional<int> girth_of_vertex(int v) const;

    bool is_connected() const;
    bool is_complete() const;
    bool is_forest() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> matrix_;
};

/// Join G ∨ H: disjoint union plus every edge between the two vertex sets.
/// H's vertices are shifted by G's vertex count.
Graph join(const Graph& g, const Graph& h);

/// Complement on the same vertex set (no self-loops).
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> original_ids;  // new id -> original id
};

/// Subgraph induced on s (kept in ascending original-id order).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Standard generators.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int p, int q);
Graph star_graph(int t);   // K_{1,t}, center is vertex 0
Graph empty_graph(int n);

/// FNV-1a digest of (n, sorted edge list); stable across runs.
std::uint64_t graph_digest(const Graph& g);

}  // namespace starb

#endif
