#pragma once

// Bipartite graph over parts X and Y with bit-row adjacency.
// Rows are uint64_t bitmasks of Y-indices, so both sides are capped at 64
// vertices; everything in this toolkit runs at desk scale (<= 16+16).
// Graphs are immutable after construction and safe to share across threads.

#include <cstdint>
#include <string>
#include <vector>

namespace biparrow {

enum class Side { X, Y };

struct VertexRef {
    Side side;
    int index;

    friend bool operator==(const VertexRef &a, const VertexRef &b) {
        return a.side == b.side && a.index == b.index;
    }
    friend bool operator<(const VertexRef &a, const VertexRef &b) {
        if (a.side != b.side) return a.side == Side::X;
        return a.index < b.index;
    }
};

struct Edge {
    int x;
    int y;

    friend bool operator==(const Edge &a, const Edge &b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Edge &a, const Edge &b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

class BipartiteGraph {
  public:
    static constexpr int max_side = 64;

    // Builds the graph with exactly the de-duplicated edge set.
    // Throws std::invalid_argument naming the offending pair if an index is
    // out of range, and if a side exceeds max_side.
    static BipartiteGraph from_edge_list(int n1, int n2, const std::vector<Edge> &edges);

    // K_{n1,n2}; requires n1, n2 >= 1.
    static BipartiteGraph complete(int n1, int n2);

    // Bipartite complement on the same vertex sets.
    BipartiteGraph complement() const;

    int n1() const { return n1_; }
    int n2() const { return n2_; }

    std::uint64_t x_row(int x) const { return xrows_[x]; }
    std::uint64_t y_row(int y) const { return yrows_[y]; }

    bool has_edge(int x, int y) const { return (xrows_[x] >> y) & 1u; }

    int degree_x(int x) const;
    int degree_y(int y) const;
    int edge_count() const;

    // Minimum degree over both sides; throws std::domain_error when the
    // graph has no vertices at all.
    int min_degree() const;

    bool is_balanced() const { return n1_ == n2_; }
    bool is_complete() const;
    bool is_edgeless() const;

    std::vector<Edge> edges() const;  // sorted by (x, y)

    // Transpose consistency: y in x_row(x) <=> x in y_row(y). Cheap enough
    // to call from tests after every construction path.
    bool transpose_consistent() const;

    friend bool operator==(const BipartiteGraph &a, const BipartiteGraph &b) {
        return a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.xrows_ == b.xrows_;
    }

  private:
    BipartiteGraph(int n1, int n2);

    int n1_ = 0;
    int n2_ = 0;
    std::vector<std::uint64_t> xrows_;  // bit y of xrows_[x] <=> edge (x, y)
    std::vector<std::uint64_t> yrows_;  // transpose, built once at construction
};

struct InducedSubgraph {
    BipartiteGraph graph;
    std::vector<int> x_original;  // new X index -> original X index
    std::vector<int> y_original;
};

// Subgraph induced by the given X- and Y-subsets, reindexed; the mapping back
// to original indices is returned alongside. Subset indices must be in range
// and duplicate-free.
InducedSubgraph induced_subgraph(const BipartiteGraph &g, const std::vector<int> &xs,
                                 const std::vector<int> &ys);

}  // namespace biparrow
