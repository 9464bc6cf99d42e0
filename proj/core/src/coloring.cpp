#include "starb/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace starb {

int Coloring::max_color() const {
    int k = 0;
    for (int c : color) k = std::max(k, c);
    return k;
}

std::vector<int> Coloring::used_colors() const {
    std::vector<int> u(color);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

Coloring trivial_coloring(const Graph& g) {
    Coloring c;
    c.color.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) c.color[v] = v + 1;
    return c;
}

void validate_coloring(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                    " vertices, graph has " + std::to_string(g.vertex_count()));
    for (int v = 0; v < c.size(); ++v)
        if (c.color[v] < 1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no positive color");
}

bool is_proper(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    for (auto [u, v] : g.edges())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

std::optional<P4Witness> find_bicolored_p4(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("coloring is not proper");
    for (auto [b, mid] : g.edges()) {
        // Scan both orientations of the middle edge.
        for (int flip = 0; flip < 2; ++flip) {
            int x = flip ? mid : b;
            int y = flip ? b : mid;
            for (int a : g.neighbors(x)) {
                if (a == y || c.color[a] != c.color[y]) continue;
                for (int d : g.neighbors(y)) {
                    if (d == x || d == a || c.color[d] != c.color[x]) continue;
                    return P4Witness{{a, x, y, d}};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_star_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    return !find_bicolored_p4(g, c).has_value();
}

std::vector<int> cn_open(const Graph& g, const Coloring& c, int v) {
    validate_coloring(g, c);
    std::vector<int> out;
    for (int u : g.neighbors(v)) out.push_back(c.color[u]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> cn_closed(const Graph& g, const Coloring& c, int v) {
    auto out = cn_open(g, c, v);
    auto it = std::lower_bound(out.begin(), out.end(), c.color[v]);
    if (it == out.end() || *it != c.color[v]) out.insert(it, c.color[v]);
    return out;
}

Coloring canonical_form(const Coloring& c) {
    std::map<int, int> relabel;
    Coloring out;
    out.color.reserve(c.color.size());
    int next = 1;
    for (int col : c.color) {
        auto [it, fresh] = relabel.try_emplace(col, next);
        if (fresh) ++next;
        out.color.push_back(it->second);
    }
    return out;
}

std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> classes(c.max_color());
    for (int v = 0; v < c.size(); ++v) classes[c.color[v] - 1].push_back(v);
    return classes;
}

namespace detail {

std::optional<P4Witness> bicolored_p4_through(const Graph& g, const std::vector<int>& color,
                                              int v) {
    int cv = color[v];
    if (cv == 0) return std::nullopt;
    // v as an endpoint: v-b-c-d with color(c)=color(v), color(d)=color(b).
    for (int b : g.neighbors(v)) {
        if (color[b] == 0) continue;
        for (int c : g.neighbors(b)) {
            if (c == v || color[c] != cv) continue;
            for (int d : g.neighbors(c)) {
                if (d == b || d == v || color[d] == 0) continue;
                if (color[d] == color[b]) return P4Witness{{v, b, c, d}};
            }
        }
    }
    // v as an inner vertex: a-v-c-d with color(a)=color(c), color(d)=color(v).
    for (int c : g.neighbors(v)) {
        if (color[c] == 0) continue;
        for (int a : g.neighbors(v)) {
            if (a == c || color[a] != color[c]) continue;
            for (int d : g.neighbors(c)) {
                if (d == v || d == a || color[d] == 0) continue;
                if (color[d] == cv) return P4Witness{{a, v, c, d}};
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

}  // namespace starb
