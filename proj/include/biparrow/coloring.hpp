#pragma once

// Red/blue edge colorings over a shared base graph, monochromatic subgraphs,
// and per-coloring predicates about monochromatic components and covers.
// Colorings are value-like and cheaply copyable; the base graph is shared
// read-only.

#include <memory>
#include <optional>

#include "biparrow/bipartite_graph.hpp"
#include "biparrow/cycles.hpp"
#include "biparrow/matching.hpp"
#include "biparrow/target.hpp"

namespace biparrow {

enum class Color { red, blue };

inline Color other(Color c) { return c == Color::red ? Color::blue : Color::red; }
inline char color_char(Color c) { return c == Color::red ? 'r' : 'b'; }

class EdgeColoring {
  public:
    explicit EdgeColoring(std::shared_ptr<const BipartiteGraph> base);

    // Convenience constructor that copies the graph into shared ownership.
    static EdgeColoring over(const BipartiteGraph &g) {
        return EdgeColoring(std::make_shared<const BipartiteGraph>(g));
    }

    const BipartiteGraph &base() const { return *base_; }
    std::shared_ptr<const BipartiteGraph> base_ptr() const { return base_; }

    // set() requires (x, y) to be a base edge and either unassigned or already
    // the same color; recoloring must go through unset().
    void set(int x, int y, Color c);
    void unset(int x, int y);
    std::optional<Color> get(int x, int y) const;

    std::uint64_t row(Color c, int x) const {
        return c == Color::red ? red_[x] : blue_[x];
    }

    int count(Color c) const;
    bool is_total() const;

    // Spanning subgraph on all base vertices with that color's edges.
    BipartiteGraph mono_subgraph(Color c) const;

    std::vector<Edge> edges_of(Color c) const;

  private:
    std::shared_ptr<const BipartiteGraph> base_;
    std::vector<std::uint64_t> red_, blue_;
};

// Witness for a positive contains_target answer: matching edges for CM
// targets, a cycle for cycle targets.
struct TargetWitness {
    std::vector<Edge> matching;
    CycleWitness cycle;
};

struct TargetCheck {
    bool found = false;
    bool degenerate = false;  // CM_0: trivially present
    TargetWitness witness;
};

TargetCheck contains_target(const EdgeColoring &c, Color color, const Target &t);

struct MonoProfiles {
    ComponentProfile red;
    ComponentProfile blue;
};

MonoProfiles mono_component_profile(const EdgeColoring &c);

// Per-coloring probe of the component structure a dense host forces, for a
// total coloring of a balanced graph and parameters (m, n):
//   disjunction_holds - red component with >= m vertices in both sides, or
//                       blue component with >= n in both sides.
//   blue_meets_n      - evaluated when red has no CM_m: does a blue
//                       component meet both sides in >= n vertices?
//   cover_escape      - evaluated when such a blue component exists: for the
//                       largest one (ties by min-side size, then total size,
//                       then lowest component id) and the canonical Koenig
//                       cover S of it, does B \ S lie in one red component?
struct LemmaReport {
    bool red_component_m = false;
    bool blue_component_n = false;
    bool disjunction_holds = false;
    bool red_has_cm_m = false;
    std::optional<bool> blue_meets_n;
    struct CoverEscape {
        int blue_component = -1;
        int cover_size = 0;
        bool in_one_red_component = false;
    };
    std::optional<CoverEscape> cover_escape;
};

// Throws std::invalid_argument for partial colorings or unbalanced bases.
LemmaReport check_lemma_conclusions(const EdgeColoring &c, int m, int n);

}  // namespace biparrow
