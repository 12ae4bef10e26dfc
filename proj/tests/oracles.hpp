#pragma once

// Test-only oracles, deliberately independent of the library's algorithms:
// bitmask-DP matching, subset+permutation cycle search, and a no-pruning
// full-enumeration arrowing check built on top of them.

#include <cstdint>
#include <optional>
#include <vector>

#include "biparrow/bipartite_graph.hpp"
#include "biparrow/target.hpp"

namespace biparrow::oracles {

// Maximum matching by DP over Y-subsets: O(n1 * 2^n2 * n2). n2 <= ~16.
int max_matching(const BipartiteGraph &g);

// Component ids by plain BFS (own implementation).
struct Components {
    std::vector<int> x_comp, y_comp;
    int count = 0;
};
Components components(const BipartiteGraph &g);

// Max over components of the component's DP matching number.
int max_connected_matching(const BipartiteGraph &g);

// Exact-length cycle by enumerating vertex subsets and checking for a
// Hamilton cycle of the induced subgraph via permutations.
bool has_cycle(const BipartiteGraph &g, int length);

std::vector<int> spectrum(const BipartiteGraph &g, int max_len);

bool contains_target(const BipartiteGraph &mono, const Target &t);

// Full 2^|E| enumeration of total colorings, no pruning, no symmetry.
// Returns true iff every coloring has a red t_red or a blue t_blue.
bool arrows(const BipartiteGraph &g, const Target &t_red, const Target &t_blue);

// Minimal adjacency encoding by brute force over all row and column
// permutations, in the same byte format canonical_form produces.
std::string brute_canonical_bytes(const BipartiteGraph &g);

// Number of isomorphism classes of bipartite graphs on a+b labeled-side
// vertices under Sym(a) x Sym(b), by Burnside's lemma.
unsigned long long burnside_class_count(int a, int b);

}  // namespace biparrow::oracles
