#include "starb/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace starb {

void Graph::check_vertex(int v) const {
    if (!has_vertex(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                    std::to_string(n_) + ")");
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.matrix_.assign(static_cast<size_t>(n) * n, 0);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : pairs) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        ", " + std::to_string(v) + ")");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        g.matrix_[static_cast<size_t>(u) * n + v] = 1;
        g.matrix_[static_cast<size_t>(v) * n + u] = 1;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<int>(seen.size());
    return g;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::distances_from(int v) const {
    check_vertex(v);
    std::vector<int> dist(n_, -1);
    std::deque<int> queue{v};
    dist[v] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::optional<int> Graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    int d = distances_from(u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::vector<int> Graph::ball(int v, int r) const {
    check_vertex(v);
    auto dist = distances_from(v);
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (dist[u] >= 0 && dist[u] <= r) out.push_back(u);
    return out;
}

std::optional<int> Graph::girth_of_vertex(int v) const {
    check_vertex(v);
    // Shortest cycle through v = min over incident edges vw of
    // dist(v, w) in G - vw, plus one.
    int best = -1;
    for (int w : adj_[v]) {
        std::vector<int> dist(n_, -1);
        std::deque<int> queue{v};
        dist[v] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int x : adj_[u]) {
                if ((u == v && x == w) || (u == w && x == v)) continue;
                if (dist[x] < 0) {
                    dist[x] = dist[u] + 1;
                    queue.push_back(x);
                }
            }
        }
        if (dist[w] >= 0 && (best < 0 || dist[w] + 1 < best)) best = dist[w] + 1;
    }
    if (best < 0) return std::nullopt;
    return best;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_complete() const { return 2 * m_ == n_ * (n_ - 1); }

bool Graph::is_forest() const {
    // A graph is a forest iff every component has |E| = |V| - 1,
    // i.e. globally m = n - #components.
    std::vector<int> comp(n_, -1);
    int components = 0;
    for (int s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = components;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = components;
                    queue.push_back(w);
                }
        }
        ++components;
    }
    return m_ == n_ - components;
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    std::vector<std::pair<int, int>> pairs = g.edges();
    for (auto [u, v] : h.edges()) pairs.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) pairs.emplace_back(u, ng + v);
    return Graph::from_edge_list(ng + nh, pairs);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> ids(s);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> back(g.vertex_count(), -1);
    for (size_t i = 0; i < ids.size(); ++i) back[ids[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> pairs;
    for (auto [u, v] : g.edges())
        if (back[u] >= 0 && back[v] >= 0) pairs.emplace_back(back[u], back[v]);
    return {Graph::from_edge_list(static_cast<int>(ids.size()), pairs), std::move(ids)};
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, pairs);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return Graph::from_edge_list(n, pairs);
}

Graph complete_bipartite_graph(int p, int q) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) pairs.emplace_back(u, p + v);
    return Graph::from_edge_list(p + q, pairs);
}

Graph star_graph(int t) { return complete_bipartite_graph(1, t); }

Graph empty_graph(int n) { return Graph::from_edge_list(n, {}); }

std::uint64_t graph_digest(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(static_cast<std::uint64_t>(g.vertex_count()));
    mix(static_cast<std::uint64_t>(g.edge_count()));
    for (auto [u, v] : g.edges()) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    return h;
}

}  // namespace starb
