#ifndef STARB_COLORING_HPP
#define STARB_COLORING_HPP

#include <array>
#include <optional>
#include <vector>

#include "starb/graph.hpp"

namespace starb {

/// Total assignment of positive integer colors to vertices. Search
/// intermediates may leave gaps in the palette; canonical_form() renumbers
/// colors 1..k by first occurrence along vertex order.
struct Coloring {
    std::vector<int> color;  // color[v] >= 1

    int size() const { return static_cast<int>(color.size()); }
    int operator[](int v) const { return color[v]; }

    int max_color() const;
    /// Distinct colors actually used, ascending.
    std::vector<int> used_colors() const;
    int distinct_count() const { return static_cast<int>(used_colors().size()); }

    bool operator==(const Coloring&) const = default;
};

/// Path on four vertices a-b-c-d (edges ab, bc, cd). When returned as a
/// bicolored witness, color(a) = color(c) and color(b) = color(d).
struct P4Witness {
    std::array<int, 4> path;

    bool contains(int v) const {
        return path[0] == v || path[1] == v || path[2] == v || path[3] == v;
    }
};

/// Every vertex gets its own color (color = id + 1).
Coloring trivial_coloring(const Graph& g);

bool is_proper(const Graph& g, const Coloring& c);

/// Exhaustive search for a path a-b-c-d with color(a)=color(c) and
/// color(b)=color(d), anchored on middle edges b-c. Requires a proper
/// coloring (throws std::invalid_argument otherwise).
std::optional<P4Witness> find_bicolored_p4(const Graph& g, const Coloring& c);

/// Proper and free of bicolored P4s, i.e. every two color classes induce a
/// forest of stars.
bool is_star_coloring(const Graph& g, const Coloring& c);

/// Colors present in the open / closed neighborhood of v, ascending.
std::vector<int> cn_open(const Graph& g, const Coloring& c, int v);
std::vector<int> cn_closed(const Graph& g, const Coloring& c, int v);

/// Renumbers colors by first occurrence along vertex order 0..n-1.
/// Idempotent; preserves the class partition.
Coloring canonical_form(const Coloring& c);

/// Vertex sets per color; entry i holds the class of color i+1 (possibly
/// empty for gapped palettes).
std::vector<std::vector<int>> color_classes(const Coloring& c);

/// Throws unless c assigns every vertex of g a positive color.
void validate_coloring(const Graph& g, const Coloring& c);

namespace detail {

/// Bicolored-P4 test restricted to paths that contain v; sufficient for
/// incremental checks because any new bicolored P4 after recoloring v
/// passes through v. Vertices with color 0 are treated as uncolored and
/// never participate.
std::optional<P4Witness> bicolored_p4_through(const Graph& g, const std::vector<int>& color,
                                              int v);

}  // namespace detail

}  // namespace starb

#endif
