#pragma once

// The counterexample-coloring search engine: decide g -> (t_red, t_blue) by
// exhaustive backtracking over total colorings with monotone pruning, and
// compute bipartite Ramsey numbers by scanning K_{N,N}.
//
// Concurrency contract: the base graph is shared read-only; each subtask owns
// a private coloring state with a rollback tape. The boolean verdict is
// deterministic and independent of scheduling; witness identity may vary
// across runs when jobs > 1 (and is the lexicographically first surviving
// coloring in branch order when jobs == 1). With a finite budget and jobs > 1
// the arrows/undecided boundary can depend on scheduling; acceptance-grade
// runs use an unlimited budget.

#include <functional>
#include <limits>
#include <memory>
#include <optional>

#include "biparrow/coloring.hpp"

namespace biparrow {

inline constexpr std::uint64_t unlimited_budget = std::numeric_limits<std::uint64_t>::max();

enum class ArrowOutcome { arrows, counterexample, undecided };

std::string to_string(ArrowOutcome outcome);

struct SearchStats {
    std::uint64_t nodes = 0;            // decision nodes expanded
    std::uint64_t prune_red = 0;        // branches cut: partial red contains t_red
    std::uint64_t prune_blue = 0;
    std::uint64_t prune_symmetry = 0;   // branches cut by the K_{N,N} symmetry constraints
    std::uint64_t red_completions = 0;  // branches closed by the all-red completion shortcut
    std::uint64_t frontier = 0;         // open branches at the moment a budget ran out
    bool exhausted = false;             // true when the search space was fully covered

    void merge(const SearchStats &o);
};

struct ArrowVerdict {
    ArrowOutcome outcome = ArrowOutcome::undecided;
    std::optional<EdgeColoring> witness;  // present iff outcome == counterexample
    SearchStats stats;
    bool degenerate = false;  // a degenerate-true target decided the verdict
};

// Instrumentation payload: the partial coloring at an expanded node.
struct NodeSample {
    const BipartiteGraph &g;
    const std::vector<std::uint64_t> &red_rows;
    const std::vector<std::uint64_t> &blue_rows;
    int assigned;
};

enum class EdgeOrderPolicy {
    // Descending by min endpoint degree; ties by (x, y).
    degree_rowmajor,
    // Descending by min endpoint degree; ties grow square blocks (shells), so
    // connected structures form early and pruning bites sooner on regular
    // hosts. This is the default.
    degree_shell,
};

struct SearchOptions {
    std::uint64_t budget = unlimited_budget;
    int jobs = 1;
    bool symmetry_breaking = true;  // complete hosts only; see arrowing.cpp
    bool side_swap_cut = false;     // weak transpose cut, off by default
    int split_depth = 8;            // tree split depth for parallel runs
    EdgeOrderPolicy order = EdgeOrderPolicy::degree_shell;
    int completion_window = 20;     // run the all-red completion shortcut when
                                    // at most this many edges are uncolored
    std::function<void(const NodeSample &)> node_hook;  // jobs == 1 recommended
};

// Exhaustive search for a total coloring with neither a red t_red nor a blue
// t_blue. Counterexample witnesses are independently re-verified before being
// returned. A budget exhaustion yields an explicit undecided verdict.
ArrowVerdict find_bad_coloring(const BipartiteGraph &g, const Target &t_red,
                               const Target &t_blue, const SearchOptions &options = {});

// Thin wrapper with an unlimited budget; never undecided.
bool arrows(const BipartiteGraph &g, const Target &t_red, const Target &t_blue,
            const SearchOptions &options = {});

struct RamseyStep {
    int n = 0;
    ArrowOutcome outcome = ArrowOutcome::undecided;
    SearchStats stats;
};

struct RamseyResult {
    std::optional<int> value;             // smallest N with K_{N,N} -> (t_red, t_blue)
    bool undecided = false;               // a budget ran out before the scan finished
    std::vector<RamseyStep> steps;        // every N tested, from 1 upward
    std::optional<EdgeColoring> witness_below;  // bad coloring of K_{value-1,value-1}
    SearchStats certificate_stats;        // stats of the arrows-true search at value
};

// Tests every N from 1 upward until the first arrows-true; value is absent
// when no N <= n_max works ("exceeds bound").
RamseyResult bipartite_ramsey(const Target &t_red, const Target &t_blue, int n_max,
                              const SearchOptions &options = {});

struct FamilyEntry {
    int index = 0;
    ArrowOutcome outcome = ArrowOutcome::undecided;
    SearchStats stats;
    std::optional<EdgeColoring> witness;  // kept for failures
};

struct FamilyReport {
    int total = 0;
    int arrows_count = 0;
    int counterexample_count = 0;
    int undecided_count = 0;
    bool all_arrow = false;
    std::vector<FamilyEntry> entries;
};

FamilyReport arrows_family(const std::vector<BipartiteGraph> &family, const Target &t_red,
                           const Target &t_blue, const SearchOptions &options = {});

// The decision order used by the search, exposed for tests.
std::vector<Edge> search_edge_order(const BipartiteGraph &g, EdgeOrderPolicy policy);

}  // namespace biparrow
