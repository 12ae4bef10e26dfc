#pragma once

// Maximum matching, Koenig minimum vertex cover, connected components and
// maximum connected matchings. All operations are pure functions of the
// input graph; safe to call concurrently from many workers.

#include "biparrow/bipartite_graph.hpp"

namespace biparrow {

struct MatchingResult {
    std::vector<Edge> matching;      // pairwise vertex-disjoint, sorted by x
    std::vector<VertexRef> cover;    // canonical Koenig cover, sorted
    int size = 0;                    // |matching| == |cover|
};

// Hopcroft-Karp maximum matching with the canonical Koenig cover:
// Z = vertices reachable by alternating paths from unmatched X-vertices,
// cover = (X \ Z) u (Y n Z). Deterministic for a given graph.
MatchingResult maximum_matching(const BipartiteGraph &g);

struct ComponentSize {
    int x_count = 0;
    int y_count = 0;
    int total() const { return x_count + y_count; }
};

struct ComponentDecomposition {
    std::vector<int> x_comp;          // component id per X-vertex
    std::vector<int> y_comp;
    std::vector<ComponentSize> sizes; // indexed by component id
    int count() const { return int(sizes.size()); }
};

// Components numbered in discovery order scanning x0..x_{n1-1} then y0..;
// isolated vertices are singleton components.
ComponentDecomposition components(const BipartiteGraph &g);

struct ConnectedMatching {
    int size = 0;       // max over components of that component's matching number
    int component = -1; // lowest achieving component id; -1 for a vertexless graph
};

ConnectedMatching max_connected_matching(const BipartiteGraph &g);

// Threshold query: does some component contain a k-matching? Stops growing a
// component's matching as soon as k is reached. Fills *witness (when
// non-null and the answer is yes) with k matching edges from one component.
bool has_connected_matching(const BipartiteGraph &g, int k, std::vector<Edge> *witness = nullptr);

struct ComponentProfile {
    int max_min_side = 0;            // max over components of min(|C n X|, |C n Y|)
    int max_min_side_component = -1; // lowest achieving id
    int max_total = 0;               // max over components of |C|
    int max_total_component = -1;
};

ComponentProfile largest_component_profile(const BipartiteGraph &g);

// Maximum matching size restricted to the vertices in (xmask, ymask), stopping
// early once `cap` is reached (cap < 0 means no cap). Exposed for the search
// engine and the component-restricted queries above.
int matching_within(const BipartiteGraph &g, std::uint64_t xmask, std::uint64_t ymask, int cap,
                    std::vector<Edge> *out_edges = nullptr);

}  // namespace biparrow
