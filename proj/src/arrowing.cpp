#include "biparrow/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace biparrow {

std::string to_string(ArrowOutcome outcome) {
    switch (outcome) {
        case ArrowOutcome::arrows: return "arrows";
        case ArrowOutcome::counterexample: return "counterexample";
        case ArrowOutcome::undecided: return "undecided";
    }
    return "?";
}

void SearchStats::merge(const SearchStats &o) {
    nodes += o.nodes;
    prune_red += o.prune_red;
    prune_blue += o.prune_blue;
    prune_symmetry += o.prune_symmetry;
    red_completions += o.red_completions;
    frontier += o.frontier;
    exhausted = exhausted && o.exhausted;
}

std::vector<Edge> search_edge_order(const BipartiteGraph &g, EdgeOrderPolicy policy) {
    std::vector<Edge> order = g.edges();
    auto min_deg = [&](const Edge &e) { return std::min(g.degree_x(e.x), g.degree_y(e.y)); };
    if (policy == EdgeOrderPolicy::degree_rowmajor) {
        std::stable_sort(order.begin(), order.end(), [&](const Edge &a, const Edge &b) {
            const int da = min_deg(a), db = min_deg(b);
            if (da != db) return da > db;
            if (a.x != b.x) return a.x < b.x;
            return a.y < b.y;
        });
    } else {
        // Shell tie-break: grow square blocks so both sides gain vertices
        // early and monochromatic structures become connected sooner.
        auto shell_key = [](const Edge &e) {
            const int s = std::max(e.x, e.y);
            const int on_row = (e.x == s) ? 0 : 1;
            const int minor = (e.x == s) ? e.y : e.x;
            return std::tuple<int, int, int>(s, on_row, minor);
        };
        std::stable_sort(order.begin(), order.end(), [&](const Edge &a, const Edge &b) {
            const int da = min_deg(a), db = min_deg(b);
            if (da != db) return da > db;
            return shell_key(a) < shell_key(b);
        });
    }
    return order;
}

namespace {

constexpr int kNone = -1;

enum class OpKind : std::uint8_t { bit, uf_union, ecnt, mate_x, mate_y, matched, row0 };

struct Op {
    OpKind kind;
    std::uint8_t color;
    std::int32_t a, b, c;
};

struct ColorState {
    std::vector<std::uint64_t> xrows, yrows;
    std::vector<std::int32_t> parent, rnk;
    std::vector<std::int32_t> xcnt, ycnt, ecnt, matched;  // valid at roots
    std::vector<std::int32_t> mate_x, mate_y;

    void init(int n1, int n2) {
        xrows.assign(n1, 0);
        yrows.assign(n2, 0);
        const int n = n1 + n2;
        parent.resize(n);
        for (int v = 0; v < n; ++v) parent[v] = v;
        rnk.assign(n, 0);
        xcnt.assign(n, 0);
        ycnt.assign(n, 0);
        ecnt.assign(n, 0);
        matched.assign(n, 0);
        for (int x = 0; x < n1; ++x) xcnt[x] = 1;
        for (int y = 0; y < n2; ++y) ycnt[n1 + y] = 1;
        mate_x.assign(n1, kNone);
        mate_y.assign(n2, kNone);
    }

    int find(int v) const {
        while (parent[v] != v) v = parent[v];
        return v;
    }
};

enum class DfsResult { found, exhausted, aborted };

struct SharedControl {
    std::atomic<std::uint64_t> nodes_used{0};
    std::atomic<bool> stop{false};
    std::uint64_t budget = unlimited_budget;
};

class Searcher {
  public:
    Searcher(const BipartiteGraph &g, const Target &t_red, const Target &t_blue,
             const SearchOptions &options, SharedControl &control)
        : g_(g), targets_{t_red, t_blue}, options_(options), control_(control) {
        order_ = search_edge_order(g, options.order);
        cs_[0].init(g.n1(), g.n2());
        cs_[1].init(g.n1(), g.n2());
        tape_.reserve(4096);
        min_blue0_ = g.n2();

        sym_active_ = options.symmetry_breaking && g.is_complete() && g.n1() >= 1 && g.n2() >= 2;
        if (options.side_swap_cut && g.n1() == g.n2() && targets_[0] == targets_[1]) {
            bool invariant = true;
            for (int x = 0; x < g.n1() && invariant; ++x)
                invariant = (g.x_row(x) == g.y_row(x));
            if (invariant) {
                for (const Edge &e : order_) {
                    if (e.x != e.y && g.has_edge(e.y, e.x)) {
                        swap_active_ = true;
                        swap_edge_ = e;
                        swap_partner_ = {e.y, e.x};
                        break;
                    }
                }
            }
        }
    }

    const std::vector<Edge> &order() const { return order_; }
    SearchStats &stats() { return stats_; }

    // Full DFS from the given depth (call after replaying any prefix).
    DfsResult dfs(int depth) {
        if (control_.stop.load(std::memory_order_relaxed)) return DfsResult::aborted;
        if (depth == int(order_.size())) {
            record_witness();
            return DfsResult::found;
        }
        if (can_close_all_red(depth)) {
            ++stats_.red_completions;
            record_all_red_witness();
            return DfsResult::found;
        }
        for (int ci = 0; ci < 2; ++ci) {
            if (ci == 1 && control_.stop.load(std::memory_order_relaxed))
                return DfsResult::aborted;
            ++stats_.nodes;
            if (control_.budget != unlimited_budget &&
                control_.nodes_used.fetch_add(1, std::memory_order_relaxed) + 1 >
                    control_.budget) {
                ++stats_.frontier;  // this node's remaining branches stay open
                return DfsResult::aborted;
            }
            const std::size_t mark = tape_.size();
            DfsResult result = DfsResult::exhausted;
            if (try_assign(order_[depth], ci)) {
                if (options_.node_hook)
                    options_.node_hook(
                        NodeSample{g_, cs_[0].xrows, cs_[1].xrows, depth + 1});
                result = dfs(depth + 1);
            }
            rollback(mark);
            if (result != DfsResult::exhausted) {
                if (result == DfsResult::aborted && ci == 0) ++stats_.frontier;
                return result;
            }
        }
        return DfsResult::exhausted;
    }

    // DFS capped at `cap`: surviving partial assignments are pushed as tasks.
    DfsResult collect_frontier(int depth, int cap, std::vector<std::vector<int>> &tasks) {
        if (depth == cap) {
            tasks.push_back(path_);
            return DfsResult::exhausted;
        }
        if (depth == int(order_.size())) {
            record_witness();
            return DfsResult::found;
        }
        if (can_close_all_red(depth)) {
            ++stats_.red_completions;
            record_all_red_witness();
            return DfsResult::found;
        }
        for (int ci = 0; ci < 2; ++ci) {
            ++stats_.nodes;
            if (control_.budget != unlimited_budget &&
                control_.nodes_used.fetch_add(1, std::memory_order_relaxed) + 1 >
                    control_.budget) {
                ++stats_.frontier;
                return DfsResult::aborted;
            }
            const std::size_t mark = tape_.size();
            DfsResult result = DfsResult::exhausted;
            if (try_assign(order_[depth], ci)) {
                if (options_.node_hook)
                    options_.node_hook(
                        NodeSample{g_, cs_[0].xrows, cs_[1].xrows, depth + 1});
                path_.push_back(ci);
                result = collect_frontier(depth + 1, cap, tasks);
                path_.pop_back();
            }
            rollback(mark);
            if (result != DfsResult::exhausted) {
                if (result == DfsResult::aborted && ci == 0) ++stats_.frontier;
                return result;
            }
        }
        return DfsResult::exhausted;
    }

    // Replays a frontier prefix; every assignment must survive (it did when
    // the task was generated).
    void replay(const std::vector<int> &prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            if (!try_assign(order_[i], prefix[i]))
                throw std::logic_error("arrowing: frontier replay hit a prune");
        }
    }

    // Rolls everything back; the searcher is ready for the next task.
    void reset() { rollback(0); }

    // Witness as (red rows, blue rows) captured at the found leaf.
    const std::vector<std::uint64_t> &witness_red() const { return witness_red_; }
    const std::vector<std::uint64_t> &witness_blue() const { return witness_blue_; }

  private:
    std::uint64_t ybit(int y) const { return std::uint64_t(1) << y; }

    void record_witness() {
        witness_red_ = cs_[0].xrows;
        witness_blue_ = cs_[1].xrows;
    }

    void record_all_red_witness() {
        witness_red_.assign(g_.n1(), 0);
        for (int x = 0; x < g_.n1(); ++x)
            witness_red_[x] = g_.x_row(x) & ~cs_[1].xrows[x];
        witness_blue_ = cs_[1].xrows;
    }

    // All-red completion shortcut: if the red graph can never reach its
    // target even with every uncolored edge turned red, the assignment that
    // colors all remaining edges red is a surviving leaf (the blue graph is
    // unchanged and already target-free). Only run for connected-matching
    // red targets and near the leaves, where it trims the endgame.
    bool can_close_all_red(int depth) {
        if (targets_[0].kind() != TargetKind::connected_matching) return false;
        if (int(order_.size()) - depth > options_.completion_window) return false;
        std::vector<Edge> edges;
        for (int x = 0; x < g_.n1(); ++x) {
            std::uint64_t row = g_.x_row(x) & ~cs_[1].xrows[x];
            while (row) {
                const int y = std::countr_zero(row);
                row &= row - 1;
                edges.push_back({x, y});
            }
        }
        const BipartiteGraph all_red =
            BipartiteGraph::from_edge_list(g_.n1(), g_.n2(), edges);
        return !has_connected_matching(all_red, targets_[0].param());
    }

    bool try_assign(const Edge e, int ci) {
        ColorState &s = cs_[ci];

        if (sym_active_ && e.x == 0) {
            if (ci == 0 && e.y > min_blue0_) return prune_symmetry();
            if (ci == 1 && e.y < max_red0_) return prune_symmetry();
        }
        if (swap_active_) {
            // forbid (swap_edge_ blue, partner red): the transposed coloring
            // is searched instead
            if (e == swap_partner_ && ci == 0 &&
                (cs_[1].xrows[swap_edge_.x] >> swap_edge_.y) & 1u)
                return prune_symmetry();
            if (e == swap_edge_ && ci == 1 &&
                (cs_[0].xrows[swap_partner_.x] >> swap_partner_.y) & 1u)
                return prune_symmetry();
        }

        s.xrows[e.x] |= ybit(e.y);
        s.yrows[e.y] |= std::uint64_t(1) << e.x;
        tape_.push_back({OpKind::bit, std::uint8_t(ci), e.x, e.y, 0});

        if (sym_active_ && e.x == 0) {
            tape_.push_back({OpKind::row0, std::uint8_t(ci), max_red0_, min_blue0_, 0});
            if (ci == 0)
                max_red0_ = std::max(max_red0_, e.y);
            else
                min_blue0_ = std::min(min_blue0_, e.y);
            ++row0_assigned_;
            if (row0_assigned_ == g_.n2() && !row1_ok()) return prune_symmetry();
        } else if (sym_active_ && e.x == 1 && row0_assigned_ == g_.n2()) {
            if (!row1_ok()) return prune_symmetry();
        }

        const int rx = s.find(e.x);
        const int ry = s.find(g_.n1() + e.y);
        const int root = (rx == ry) ? rx : unite(s, ci, rx, ry);
        ++s.ecnt[root];
        tape_.push_back({OpKind::ecnt, std::uint8_t(ci), root, 0, 0});

        if (targets_[ci].kind() == TargetKind::connected_matching) {
            maintain_matching(s, ci, e, root);
            if (s.matched[root] >= targets_[ci].param()) return prune_target(ci);
        } else {
            const int len = targets_[ci].param();
            if (std::min(s.xcnt[root], s.ycnt[root]) >= len / 2 && s.ecnt[root] >= len &&
                cycle_through_edge(s, e, len))
                return prune_target(ci);
        }
        return true;
    }

    bool prune_symmetry() {
        ++stats_.prune_symmetry;
        return false;
    }

    bool prune_target(int ci) {
        if (ci == 0)
            ++stats_.prune_red;
        else
            ++stats_.prune_blue;
        return false;
    }

    // Row-1 constraint on complete hosts: once row 0 is total, its red set is
    // a prefix of length t, and the leftover Y-symmetry acts inside [0, t)
    // and [t, n2) separately, so row 1's reds may be forced to a prefix of
    // each block.
    bool row1_ok() const {
        if (g_.n1() < 2) return true;
        const int t = max_red0_ + 1;
        const std::uint64_t full =
            (g_.n2() >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g_.n2()) - 1);
        const std::uint64_t block_a = (t == 0) ? 0 : ((std::uint64_t(1) << t) - 1);
        const std::uint64_t block_b = full & ~block_a;
        auto prefix_ok = [&](std::uint64_t mask) {
            const std::uint64_t red = cs_[0].xrows[1] & mask;
            const std::uint64_t blue = cs_[1].xrows[1] & mask;
            if (!red || !blue) return true;
            return int(std::bit_width(red)) - 1 < std::countr_zero(blue);
        };
        return prefix_ok(block_a) && prefix_ok(block_b);
    }

    int unite(ColorState &s, int ci, int a, int b) {
        if (s.rnk[a] < s.rnk[b]) std::swap(a, b);
        const int bump = (s.rnk[a] == s.rnk[b]) ? 1 : 0;
        s.parent[b] = a;
        s.rnk[a] += bump;
        s.xcnt[a] += s.xcnt[b];
        s.ycnt[a] += s.ycnt[b];
        s.ecnt[a] += s.ecnt[b];
        s.matched[a] += s.matched[b];
        tape_.push_back({OpKind::uf_union, std::uint8_t(ci), a, b, bump});
        return a;
    }

    void set_mate_x(ColorState &s, int ci, int x, int value) {
        tape_.push_back({OpKind::mate_x, std::uint8_t(ci), x, s.mate_x[x], 0});
        s.mate_x[x] = value;
    }
    void set_mate_y(ColorState &s, int ci, int y, int value) {
        tape_.push_back({OpKind::mate_y, std::uint8_t(ci), y, s.mate_y[y], 0});
        s.mate_y[y] = value;
    }

    bool augment_from(ColorState &s, int ci, int x, std::uint64_t &visited_y) {
        std::uint64_t row = s.xrows[x] & ~visited_y;
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            visited_y |= ybit(y);
            const int nx = s.mate_y[y];
            if (nx == kNone || augment_from(s, ci, nx, visited_y)) {
                set_mate_x(s, ci, x, y);
                set_mate_y(s, ci, y, x);
                return true;
            }
        }
        return false;
    }

    // Restores the exact per-component maximum matching after inserting edge
    // e into color ci; the size can grow by at most one, and any augmenting
    // path must pass through e.
    void maintain_matching(ColorState &s, int ci, const Edge e, int root) {
        if (s.mate_x[e.x] == kNone && s.mate_y[e.y] == kNone) {
            set_mate_x(s, ci, e.x, e.y);
            set_mate_y(s, ci, e.y, e.x);
            ++s.matched[root];
            tape_.push_back({OpKind::matched, std::uint8_t(ci), root, 0, 0});
            return;
        }
        if (s.matched[root] == std::min(s.xcnt[root], s.ycnt[root])) return;
        std::uint64_t visited_y = 0;
        if (s.mate_x[e.x] == kNone) {
            // the path must start at e.x
            if (augment_from(s, ci, e.x, visited_y)) {
                ++s.matched[root];
                tape_.push_back({OpKind::matched, std::uint8_t(ci), root, 0, 0});
            }
            return;
        }
        for (int u = 0; u < g_.n1(); ++u) {
            if (s.mate_x[u] != kNone || s.xrows[u] == 0) continue;
            if (s.find(u) != root) continue;
            visited_y = 0;
            if (augment_from(s, ci, u, visited_y)) {
                ++s.matched[root];
                tape_.push_back({OpKind::matched, std::uint8_t(ci), root, 0, 0});
                return;
            }
        }
    }

    // Exact-length cycle through the just-inserted edge (e.x, e.y): a simple
    // path e.y -> ... -> e.x of len-1 edges in this color closes the cycle.
    bool cycle_through_edge(const ColorState &s, const Edge e, int len) {
        used_x_ = std::uint64_t(1) << e.x;
        used_y_ = ybit(e.y);
        return cycle_step_y(s, e.y, 1, len, e.x);
    }

    bool cycle_step_y(const ColorState &s, int y, int used_edges, int len, int target_x) {
        if (used_edges + 1 == len) return (s.yrows[y] >> target_x) & 1u;
        std::uint64_t row = s.yrows[y] & ~used_x_;
        while (row) {
            const int x = std::countr_zero(row);
            row &= row - 1;
            used_x_ |= std::uint64_t(1) << x;
            if (cycle_step_x(s, x, used_edges + 1, len, target_x)) return true;
            used_x_ &= ~(std::uint64_t(1) << x);
        }
        return false;
    }

    bool cycle_step_x(const ColorState &s, int x, int used_edges, int len, int target_x) {
        std::uint64_t row = s.xrows[x] & ~used_y_;
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            used_y_ |= ybit(y);
            if (cycle_step_y(s, y, used_edges + 1, len, target_x)) return true;
            used_y_ &= ~ybit(y);
        }
        return false;
    }

    void rollback(std::size_t mark) {
        while (tape_.size() > mark) {
            const Op op = tape_.back();
            tape_.pop_back();
            ColorState &s = cs_[op.color];
            switch (op.kind) {
                case OpKind::bit:
                    s.xrows[op.a] &= ~ybit(op.b);
                    s.yrows[op.b] &= ~(std::uint64_t(1) << op.a);
                    break;
                case OpKind::uf_union:
                    s.parent[op.b] = op.b;
                    s.rnk[op.a] -= op.c;
                    s.xcnt[op.a] -= s.xcnt[op.b];
                    s.ycnt[op.a] -= s.ycnt[op.b];
                    s.ecnt[op.a] -= s.ecnt[op.b];
                    s.matched[op.a] -= s.matched[op.b];
                    break;
                case OpKind::ecnt:
                    --s.ecnt[op.a];
                    break;
                case OpKind::mate_x:
                    s.mate_x[op.a] = op.b;
                    break;
                case OpKind::mate_y:
                    s.mate_y[op.a] = op.b;
                    break;
                case OpKind::matched:
                    --s.matched[op.a];
                    break;
                case OpKind::row0:
                    max_red0_ = op.a;
                    min_blue0_ = op.b;
                    --row0_assigned_;
                    break;
            }
        }
    }

    const BipartiteGraph &g_;
    Target targets_[2];
    const SearchOptions &options_;
    SharedControl &control_;
    std::vector<Edge> order_;
    ColorState cs_[2];
    std::vector<Op> tape_;
    SearchStats stats_;
    std::vector<int> path_;
    std::vector<std::uint64_t> witness_red_, witness_blue_;
    std::uint64_t used_x_ = 0, used_y_ = 0;
    bool sym_active_ = false;
    bool swap_active_ = false;
    Edge swap_edge_{0, 0}, swap_partner_{0, 0};
    int max_red0_ = -1;
    int min_blue0_ = 0;
    int row0_assigned_ = 0;
};

EdgeColoring coloring_from_rows(std::shared_ptr<const BipartiteGraph> base,
                                const std::vector<std::uint64_t> &red,
                                const std::vector<std::uint64_t> &blue) {
    EdgeColoring c(std::move(base));
    for (int x = 0; x < c.base().n1(); ++x) {
        std::uint64_t row = red[x];
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            c.set(x, y, Color::red);
        }
        row = blue[x];
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            c.set(x, y, Color::blue);
        }
    }
    return c;
}

void verify_witness_or_throw(const EdgeColoring &witness, const Target &t_red,
                             const Target &t_blue) {
    if (contains_target(witness, Color::red, t_red).found ||
        contains_target(witness, Color::blue, t_blue).found)
        throw std::logic_error("arrowing: produced witness failed re-verification");
}

}  // namespace

ArrowVerdict find_bad_coloring(const BipartiteGraph &g, const Target &t_red,
                               const Target &t_blue, const SearchOptions &options) {
    ArrowVerdict verdict;
    if (t_red.degenerate() || t_blue.degenerate()) {
        // a degenerate target is contained in every coloring
        verdict.outcome = ArrowOutcome::arrows;
        verdict.degenerate = true;
        verdict.stats.exhausted = true;
        return verdict;
    }

    auto base = std::make_shared<const BipartiteGraph>(g);
    SharedControl control;
    control.budget = options.budget;

    const int edge_count = g.edge_count();
    const bool parallel = options.jobs > 1 && edge_count > options.split_depth + 2;

    if (!parallel) {
        Searcher searcher(*base, t_red, t_blue, options, control);
        const DfsResult result = searcher.dfs(0);
        verdict.stats = searcher.stats();
        if (result == DfsResult::found) {
            verdict.outcome = ArrowOutcome::counterexample;
            verdict.witness =
                coloring_from_rows(base, searcher.witness_red(), searcher.witness_blue());
        } else if (result == DfsResult::exhausted) {
            verdict.outcome = ArrowOutcome::arrows;
            verdict.stats.exhausted = true;
        } else {
            verdict.outcome = ArrowOutcome::undecided;
        }
    } else {
        // Split the tree at a fixed depth into independent subtasks.
        const int cap = std::min(options.split_depth, edge_count);
        Searcher root(*base, t_red, t_blue, options, control);
        std::vector<std::vector<int>> tasks;
        const DfsResult gen = root.collect_frontier(0, cap, tasks);
        verdict.stats = root.stats();
        if (gen == DfsResult::found) {
            verdict.outcome = ArrowOutcome::counterexample;
            verdict.witness = coloring_from_rows(base, root.witness_red(), root.witness_blue());
        } else if (gen == DfsResult::aborted) {
            verdict.outcome = ArrowOutcome::undecided;
            verdict.stats.frontier += tasks.size();
        } else {
            std::atomic<std::size_t> next{0};
            std::atomic<bool> any_aborted{false};
            std::mutex result_mutex;
            std::optional<EdgeColoring> witness;
            SearchStats worker_stats;
            std::uint64_t unclaimed_frontier = 0;

            auto work = [&] {
                Searcher searcher(*base, t_red, t_blue, options, control);
                while (true) {
                    const std::size_t index = next.fetch_add(1);
                    if (index >= tasks.size()) break;
                    if (control.stop.load(std::memory_order_relaxed)) {
                        std::lock_guard<std::mutex> lock(result_mutex);
                        ++unclaimed_frontier;
                        continue;
                    }
                    searcher.replay(tasks[index]);
                    const DfsResult result = searcher.dfs(int(tasks[index].size()));
                    searcher.reset();
                    if (result == DfsResult::found) {
                        control.stop.store(true, std::memory_order_relaxed);
                        std::lock_guard<std::mutex> lock(result_mutex);
                        if (!witness)
                            witness = coloring_from_rows(base, searcher.witness_red(),
                                                         searcher.witness_blue());
                    } else if (result == DfsResult::aborted) {
                        any_aborted.store(true, std::memory_order_relaxed);
                    }
                }
                std::lock_guard<std::mutex> lock(result_mutex);
                worker_stats.merge(searcher.stats());
            };

            std::vector<std::thread> pool;
            const int jobs = std::max(1, options.jobs);
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto &thread : pool) thread.join();

            verdict.stats.merge(worker_stats);
            if (witness) {
                verdict.outcome = ArrowOutcome::counterexample;
                verdict.witness = std::move(witness);
            } else if (any_aborted.load()) {
                verdict.outcome = ArrowOutcome::undecided;
                verdict.stats.frontier += unclaimed_frontier;
            } else {
                verdict.outcome = ArrowOutcome::arrows;
                verdict.stats.exhausted = true;
            }
        }
    }

    if (verdict.outcome == ArrowOutcome::counterexample) {
        if (!verdict.witness->is_total())
            throw std::logic_error("arrowing: witness is not a total coloring");
        verify_witness_or_throw(*verdict.witness, t_red, t_blue);
    }
    return verdict;
}

bool arrows(const BipartiteGraph &g, const Target &t_red, const Target &t_blue,
            const SearchOptions &options) {
    SearchOptions unlimited = options;
    unlimited.budget = unlimited_budget;
    const ArrowVerdict verdict = find_bad_coloring(g, t_red, t_blue, unlimited);
    if (verdict.outcome == ArrowOutcome::undecided)
        throw std::logic_error("arrows: unlimited search reported undecided");
    return verdict.outcome == ArrowOutcome::arrows;
}

RamseyResult bipartite_ramsey(const Target &t_red, const Target &t_blue, int n_max,
                              const SearchOptions &options) {
    if (n_max < 1) throw std::invalid_argument("bipartite_ramsey: n_max must be >= 1");
    RamseyResult result;
    std::optional<EdgeColoring> last_witness;
    for (int n = 1; n <= n_max; ++n) {
        const BipartiteGraph g = BipartiteGraph::complete(n, n);
        const ArrowVerdict verdict = find_bad_coloring(g, t_red, t_blue, options);
        result.steps.push_back({n, verdict.outcome, verdict.stats});
        if (verdict.outcome == ArrowOutcome::undecided) {
            result.undecided = true;
            return result;
        }
        if (verdict.outcome == ArrowOutcome::arrows) {
            result.value = n;
            result.certificate_stats = verdict.stats;
            if (last_witness) {
                result.witness_below = std::move(last_witness);
            } else {
                // value = 1: the empty coloring of the empty graph is bad
                auto empty = std::make_shared<const BipartiteGraph>(
                    BipartiteGraph::from_edge_list(0, 0, {}));
                result.witness_below = EdgeColoring(empty);
            }
            return result;
        }
        last_witness = verdict.witness;
    }
    return result;  // value absent: exceeds bound
}

FamilyReport arrows_family(const std::vector<BipartiteGraph> &family, const Target &t_red,
                           const Target &t_blue, const SearchOptions &options) {
    FamilyReport report;
    report.total = int(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const ArrowVerdict verdict = find_bad_coloring(family[i], t_red, t_blue, options);
        FamilyEntry entry;
        entry.index = int(i);
        entry.outcome = verdict.outcome;
        entry.stats = verdict.stats;
        switch (verdict.outcome) {
            case ArrowOutcome::arrows: ++report.arrows_count; break;
            case ArrowOutcome::counterexample:
                ++report.counterexample_count;
                entry.witness = verdict.witness;
                break;
            case ArrowOutcome::undecided: ++report.undecided_count; break;
        }
        report.entries.push_back(std::move(entry));
    }
    report.all_arrow = report.arrows_count == report.total;
    return report;
}

}  // namespace biparrow
