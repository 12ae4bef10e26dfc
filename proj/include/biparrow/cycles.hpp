#pragma once

// Even-cycle existence and cycle spectra. Exact-length search by DFS with
// path-length and distance pruning; exponential worst case is accepted at
// desk scale. Pure functions, safe to call concurrently.

#include <map>
#include <optional>

#include "biparrow/bipartite_graph.hpp"

namespace biparrow {

// A cycle as the alternating vertex sequence x0, y0, x1, y1, ...; the closing
// edge (last y, x0) is implicit.
using CycleWitness = std::vector<VertexRef>;

// Checks a witness independently: correct length, alternating sides, all
// vertices distinct, every edge (including the closing one) present.
bool verify_cycle(const BipartiteGraph &g, const CycleWitness &cycle, int length);

// A simple cycle of exactly `length`, or nullopt. Throws std::invalid_argument
// for odd lengths or lengths < 4 (bipartite graphs have no odd cycles).
// Witnesses are verified before being returned.
std::optional<CycleWitness> has_cycle(const BipartiteGraph &g, int length);

struct CycleSpectrum {
    int max_len_checked = 0;
    std::vector<int> present;                 // even lengths with a cycle, ascending
    std::map<int, CycleWitness> witnesses;    // one verified witness per present length

    bool contains(int length) const {
        for (int l : present)
            if (l == length) return true;
        return false;
    }
};

CycleSpectrum spectrum(const BipartiteGraph &g, int max_len);

}  // namespace biparrow
