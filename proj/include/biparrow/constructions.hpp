#pragma once

// Generators and verifiers for the extremal witness colorings: the split
// coloring of K_{m+n-2,m+n-2} and the four-block construction whose minimum
// degree sits exactly on the 3/4 threshold.

#include "biparrow/coloring.hpp"

namespace biparrow {

struct WitnessClaim {
    std::string quantity;
    long expected = 0;
    long computed = 0;
    bool pass = false;
};

struct WitnessReport {
    std::shared_ptr<const BipartiteGraph> graph;
    EdgeColoring coloring;
    std::vector<WitnessClaim> claims;
    bool all_pass = false;
};

// K_{N,N} with N = m+n-2, X split into X1 (m-1 vertices, all edges red) and
// X2 (n-1 vertices, all edges blue). Avoids red CM_m and blue CM_n.
// Requires m > n >= 1.
WitnessReport split_witness(int m, int n);

// Four-block graph on (m+n-1)+(m+n-1) vertices with |X_i| = |Y_i| =
// (m+n-1)/4: X_i sees Y_i plus the two "far" blocks; G[X_i, Y_i] blue,
// the far blocks red. Requires (m+n-1) % 4 == 0 and n < m < 3n. Claims:
// min degree 3(m+n-1)/4, red max connected matching (m+n-1)/2, blue
// (m+n-1)/4.
WitnessReport construction_one(int m, int n);

// True iff the report's coloring is total and contains neither a red t_red
// nor a blue t_blue. Throws std::invalid_argument for partial colorings.
bool verify_witness(const WitnessReport &report, const Target &t_red, const Target &t_blue);

}  // namespace biparrow
