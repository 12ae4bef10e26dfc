#pragma once

// Canonical forms under Sym(X) x Sym(Y) (optionally with side swap), and the
// exhaustively enumerable dense families near the 3/4-degree threshold.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "biparrow/bipartite_graph.hpp"

namespace biparrow {

// Thrown when an exhaustive family is refused; callers may fall back to
// sampling.
struct FamilyTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CanonicalForm {
    std::string bytes;

    std::string hex() const;

    friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
        return a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalForm &a, const CanonicalForm &b) {
        return a.bytes < b.bytes;
    }
};

// Lexicographically minimal adjacency encoding over all vertex orderings,
// found by ordered-partition refinement of the columns with branch-and-bound
// over row placements. Equal forms <=> isomorphic (under the declared group).
// With allow_side_swap the graph and its transpose share one form.
CanonicalForm canonical_form(const BipartiteGraph &g, bool allow_side_swap);

// All balanced graphs on N+N vertices with min degree >= delta_min, up to
// isomorphism with side swap, enumerated through their complements (max
// degree <= N - delta_min). Refuses complement degree bounds above 2 with
// FamilyTooLarge("family too large; use sampling").
// Deterministic order: by edge count, then canonical form.
std::vector<BipartiteGraph> dense_family(int n, int delta_min);

// A graph with min degree >= delta_min sampled by complement-side random
// placement with rejection; deterministic under a fixed seed.
BipartiteGraph random_graph_with_min_degree(int n, int delta_min, std::uint64_t seed);

}  // namespace biparrow
