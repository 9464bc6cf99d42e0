#ifndef STARB_BLOCKING_HPP
#define STARB_BLOCKING_HPP

#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "starb/coloring.hpp"
#include "starb/graph.hpp"

namespace starb {

enum class ColorStatus {
    OwnColor,         // the color of v itself
    NeighborBlocked,  // present in N(v)
    PathBlocked,      // recoloring v alone to it creates a bicolored P4
    Available,
};

/// Classification of every used color for one vertex under a star coloring.
struct BlockReport {
    int vertex = -1;
    std::map<int, ColorStatus> status;
    std::map<int, P4Witness> path_witness;  // witness per PathBlocked color

    std::vector<int> blocked() const;    // own + neighbor + path blocked
    std::vector<int> available() const;  // complement within the used palette
};

/// Exact per-color classification for v. Requires a star coloring.
BlockReport blocked_colors(const Graph& g, const Coloring& c, int v);

/// Colors of the used palette that are not blocked for v.
std::vector<int> available_colors(const Graph& g, const Coloring& c, int v);

/// Equivalence class of v within its color class under the
/// reflexive-transitive closure of "joined by an induced P4", with one
/// witness path per directly related pair discovered.
struct P4System {
    int color = 0;
    std::vector<int> members;  // ascending, contains v
    std::vector<std::pair<std::pair<int, int>, P4Witness>> witnesses;
};

P4System p4_system(const Graph& g, const Coloring& c, int v);

/// Result of the class-elimination search for one color.
struct EliminationResult {
    int color = 0;
    /// Vertex -> new color; applying it yields a star coloring without
    /// `color`. Empty when the class is protected.
    std::optional<std::map<int, int>> reassignment;
    /// Star b-vertex protecting the class (set when infeasible).
    std::optional<int> star_b_witness;
    long long nodes = 0;

    bool feasible() const { return reassignment.has_value(); }
};

struct EliminationOptions {
    /// Force this (vertex, color) assignment during the search.
    std::optional<std::pair<int, int>> pinned;
    /// When set, candidate colors are tried in a seeded random order
    /// instead of ascending.
    std::mt19937* candidate_rng = nullptr;
    long long node_budget = -1;  // < 0: unlimited
};

/// Backtracking search for a reassignment f of the class of `color` such
/// that f(u) avoids CN(u) and the application is again a star coloring.
/// Deterministic: class vertices ascending, candidates ascending (unless
/// shuffled via options). Requires a star coloring with `color` in use.
EliminationResult class_eliminable(const Graph& g, const Coloring& c, int color);
EliminationResult class_eliminable(const Graph& g, const Coloring& c, int color,
                                   const EliminationOptions& opts);

/// Every color of the used palette other than c(v) is blocked for v.
bool is_strong_star_b_vertex(const Graph& g, const Coloring& c, int v);

/// Operational star b-vertex test: no reassignment of v's class that pins
/// v to one of its available colors yields a star coloring. Strong star
/// b-vertices qualify vacuously.
bool is_star_b_vertex(const Graph& g, const Coloring& c, int v);

struct MinimalityReport {
    bool minimal = false;
    /// color -> star b-vertex protecting that class (when minimal).
    std::map<int, int> class_witness;
    /// First eliminable color and its reassignment (when not minimal).
    std::optional<int> eliminable_color;
    std::optional<std::map<int, int>> reassignment;
    long long nodes = 0;
};

/// A star coloring is a minimal element of the recoloring order iff no
/// class is eliminable, equivalently every class holds a star b-vertex.
MinimalityReport is_minimal(const Graph& g, const Coloring& c);

namespace detail {

/// Available colors of v computed without revalidating the coloring.
std::vector<int> available_colors_raw(const Graph& g, std::vector<int>& work_colors,
                                      const std::vector<int>& used, int v);

}  // namespace detail

}  // namespace starb

#endif
