#include "starb/blocking.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace starb {

namespace {

void require_star(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) throw std::invalid_argument("coloring is not proper");
    if (find_bicolored_p4(g, c).has_value())
        throw std::invalid_argument("coloring is not a star coloring");
}

void require_used(const Coloring& c, int color) {
    for (int col : c.color)
        if (col == color) return;
    throw std::invalid_argument("color " + std::to_string(color) + " is not in use");
}

struct BudgetExhausted {};

/// DFS over reassignments of one color class. Candidate lists are fixed
/// up front; star violations are rechecked incrementally through the
/// vertex just assigned, which is complete because every bicolored P4 of
/// the final coloring contains at least one reassigned vertex.
class ClassEliminator {
public:
    ClassEliminator(const Graph& g, std::vector<int> work, std::vector<int> members,
                    std::vector<std::vector<int>> candidates, long long budget)
        : g_(g),
          work_(std::move(work)),
          members_(std::move(members)),
          candidates_(std::move(candidates)),
          budget_(budget) {}

    bool search() {
        try {
            return descend(0);
        } catch (const BudgetExhausted&) {
            return false;
        }
    }

    long long nodes() const { return nodes_; }
    const std::vector<int>& work() const { return work_; }

private:
    bool descend(size_t idx) {
        if (idx == members_.size()) return true;
        int u = members_[idx];
        for (int q : candidates_[idx]) {
            ++nodes_;
            if (budget_ >= 0 && nodes_ > budget_) throw BudgetExhausted{};
            int saved = work_[u];
            work_[u] = q;
            if (!detail::bicolored_p4_through(g_, work_, u).has_value() && descend(idx + 1))
                return true;
            work_[u] = saved;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> work_;
    std::vector<int> members_;
    std::vector<std::vector<int>> candidates_;
    long long budget_;
    long long nodes_ = 0;
};

}  // namespace

std::vector<int> BlockReport::blocked() const {
    std::vector<int> out;
    for (const auto& [color, st] : status)
        if (st != ColorStatus::Available) out.push_back(color);
    return out;
}

std::vector<int> BlockReport::available() const {
    std::vector<int> out;
    for (const auto& [color, st] : status)
        if (st == ColorStatus::Available) out.push_back(color);
    return out;
}

namespace detail {

std::vector<int> available_colors_raw(const Graph& g, std::vector<int>& work,
                                      const std::vector<int>& used, int v) {
    std::vector<int> out;
    int own = work[v];
    std::vector<int> cn;
    for (int u : g.neighbors(v)) cn.push_back(work[u]);
    std::sort(cn.begin(), cn.end());
    for (int color : used) {
        if (color == own || std::binary_search(cn.begin(), cn.end(), color)) continue;
        work[v] = color;
        bool path_blocked = bicolored_p4_through(g, work, v).has_value();
        work[v] = own;
        if (!path_blocked) out.push_back(color);
    }
    return out;
}

}  // namespace detail

BlockReport blocked_colors(const Graph& g, const Coloring& c, int v) {
    require_star(g, c);
    if (!g.has_vertex(v)) throw std::invalid_argument("vertex out of range");
    BlockReport report;
    report.vertex = v;
    std::vector<int> work(c.color);
    int own = work[v];
    std::vector<int> cn = cn_open(g, c, v);
    for (int color : c.used_colors()) {
        if (color == own) {
            report.status[color] = ColorStatus::OwnColor;
        } else if (std::binary_search(cn.begin(), cn.end(), color)) {
            report.status[color] = ColorStatus::NeighborBlocked;
        } else {
            work[v] = color;
            auto witness = detail::bicolored_p4_through(g, work, v);
            work[v] = own;
            if (witness) {
                report.status[color] = ColorStatus::PathBlocked;
                report.path_witness[color] = *witness;
            } else {
                report.status[color] = ColorStatus::Available;
            }
        }
    }
    return report;
}

std::vector<int> available_colors(const Graph& g, const Coloring& c, int v) {
    return blocked_colors(g, c, v).available();
}

P4System p4_system(const Graph& g, const Coloring& c, int v) {
    require_star(g, c);
    P4System system;
    system.color = c.color[v];
    std::vector<char> in_component(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> recorded;
    std::vector<int> queue{v};
    in_component[v] = 1;
    // Induced P4s w-x-y-u between same-colored w and u.
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int w = queue[qi];
        for (int x : g.neighbors(w)) {
            for (int y : g.neighbors(x)) {
                if (y == w || g.adjacent(w, y)) continue;
                for (int u : g.neighbors(y)) {
                    if (u == x || u == w || c.color[u] != system.color) continue;
                    if (g.adjacent(x, u) || g.adjacent(w, u)) continue;
                    std::pair<int, int> key{std::min(w, u), std::max(w, u)};
                    if (std::find(recorded.begin(), recorded.end(), key) == recorded.end()) {
                        recorded.push_back(key);
                        system.witnesses.push_back({key, P4Witness{{w, x, y, u}}});
                    }
                    if (!in_component[u]) {
                        in_component[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    for (int u = 0; u < g.vertex_count(); ++u)
        if (in_component[u]) system.members.push_back(u);
    return system;
}

EliminationResult class_eliminable(const Graph& g, const Coloring& c, int color) {
    return class_eliminable(g, c, color, {});
}

EliminationResult class_eliminable(const Graph& g, const Coloring& c, int color,
                                   const EliminationOptions& opts) {
    require_star(g, c);
    require_used(c, color);
    EliminationResult result;
    result.color = color;

    std::vector<int> members;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (c.color[u] == color) members.push_back(u);

    // Any feasible reassignment maps every class vertex to one of its
    // available colors: a path-blocked color keeps its witness P4 intact
    // because the witness avoids the class being recolored.
    std::vector<int> used = c.used_colors();
    std::vector<int> work(c.color);
    std::vector<std::vector<int>> candidates;
    candidates.reserve(members.size());
    for (int u : members) {
        if (opts.pinned && opts.pinned->first == u) {
            candidates.push_back({opts.pinned->second});
            continue;
        }
        auto avail = detail::available_colors_raw(g, work, used, u);
        if (avail.empty()) {
            result.star_b_witness = u;
            return result;
        }
        if (opts.candidate_rng) std::shuffle(avail.begin(), avail.end(), *opts.candidate_rng);
        candidates.push_back(std::move(avail));
    }
    if (members.empty()) {
        result.star_b_witness = std::nullopt;
        return result;  // unreachable given require_used
    }

    ClassEliminator search(g, work, members, std::move(candidates), opts.node_budget);
    bool found = search.search();
    result.nodes = search.nodes();
    if (found) {
        Coloring applied;
        applied.color = search.work();
        if (!is_star_coloring(g, applied))
            throw std::logic_error("elimination produced a non-star coloring");
        std::map<int, int> assignment;
        for (int u : members) assignment[u] = search.work()[u];
        result.reassignment = std::move(assignment);
    } else {
        // The class is protected; every member is then a star b-vertex.
        // Prefer a strong one as the reported witness.
        for (int u : members) {
            auto avail = detail::available_colors_raw(g, work, used, u);
            if (avail.empty()) {
                result.star_b_witness = u;
                break;
            }
        }
        if (!result.star_b_witness) result.star_b_witness = members.front();
    }
    return result;
}

bool is_strong_star_b_vertex(const Graph& g, const Coloring& c, int v) {
    return available_colors(g, c, v).empty();
}

bool is_star_b_vertex(const Graph& g, const Coloring& c, int v) {
    auto avail = available_colors(g, c, v);
    if (avail.empty()) return true;
    for (int color : avail) {
        EliminationOptions opts;
        opts.pinned = {{v, color}};
        if (class_eliminable(g, c, c.color[v], opts).feasible()) return false;
    }
    return true;
}

MinimalityReport is_minimal(const Graph& g, const Coloring& c) {
    require_star(g, c);
    MinimalityReport report;
    for (int color : c.used_colors()) {
        auto res = class_eliminable(g, c, color);
        report.nodes += res.nodes;
        if (res.feasible()) {
            report.minimal = false;
            report.eliminable_color = color;
            report.reassignment = res.reassignment;
            return report;
        }
        report.class_witness[color] = *res.star_b_witness;
    }
    report.minimal = true;
    return report;
}

}  // namespace starb
