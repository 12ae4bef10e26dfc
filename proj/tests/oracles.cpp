#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace biparrow::oracles {

int max_matching(const BipartiteGraph &g) {
    const int n2 = g.n2();
    static thread_local std::vector<std::int8_t> dp;
    dp.assign(std::size_t(1) << n2, 0);
    for (int x = 0; x < g.n1(); ++x) {
        // iterate masks descending so each row is used at most once
        for (std::int64_t mask = (std::int64_t(1) << n2) - 1; mask >= 0; --mask) {
            std::uint64_t candidates = g.x_row(x) & ~std::uint64_t(mask);
            while (candidates) {
                const int y = std::countr_zero(candidates);
                candidates &= candidates - 1;
                const std::int8_t value = std::int8_t(dp[mask] + 1);
                dp[mask | (std::uint64_t(1) << y)] =
                    std::max(dp[mask | (std::uint64_t(1) << y)], value);
            }
        }
    }
    return *std::max_element(dp.begin(), dp.end());
}

Components components(const BipartiteGraph &g) {
    Components c;
    c.x_comp.assign(g.n1(), -1);
    c.y_comp.assign(g.n2(), -1);
    auto bfs = [&](bool x_side, int start) {
        std::vector<std::pair<bool, int>> queue{{x_side, start}};
        (x_side ? c.x_comp : c.y_comp)[start] = c.count;
        while (!queue.empty()) {
            auto [on_x, v] = queue.back();
            queue.pop_back();
            if (on_x) {
                for (int y = 0; y < g.n2(); ++y)
                    if (g.has_edge(v, y) && c.y_comp[y] == -1) {
                        c.y_comp[y] = c.count;
                        queue.push_back({false, y});
                    }
            } else {
                for (int x = 0; x < g.n1(); ++x)
                    if (g.has_edge(x, v) && c.x_comp[x] == -1) {
                        c.x_comp[x] = c.count;
                        queue.push_back({true, x});
                    }
            }
        }
    };
    for (int x = 0; x < g.n1(); ++x)
        if (c.x_comp[x] == -1) {
            bfs(true, x);
            ++c.count;
        }
    for (int y = 0; y < g.n2(); ++y)
        if (c.y_comp[y] == -1) {
            bfs(false, y);
            ++c.count;
        }
    return c;
}

int max_connected_matching(const BipartiteGraph &g) {
    const Components c = components(g);
    int best = 0;
    for (int id = 0; id < c.count; ++id) {
        std::vector<int> xs, ys;
        for (int x = 0; x < g.n1(); ++x)
            if (c.x_comp[x] == id) xs.push_back(x);
        for (int y = 0; y < g.n2(); ++y)
            if (c.y_comp[y] == id) ys.push_back(y);
        if (xs.empty() || ys.empty()) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                if (g.has_edge(xs[i], ys[j])) edges.push_back({int(i), int(j)});
        best = std::max(best, max_matching(BipartiteGraph::from_edge_list(
                                  int(xs.size()), int(ys.size()), edges)));
    }
    return best;
}

namespace {

bool hamilton_cycle_exists(const BipartiteGraph &g, const std::vector<int> &xs,
                           const std::vector<int> &ys) {
    // fix xs[0] first; try all interleavings of remaining xs and all ys
    const int k = int(xs.size());
    std::vector<int> xp(xs.begin() + 1, xs.end()), yp(ys);
    std::sort(xp.begin(), xp.end());
    do {
        std::sort(yp.begin(), yp.end());
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                const int xi = (i == 0) ? xs[0] : xp[i - 1];
                const int xnext = (i == k - 1) ? xs[0] : xp[i];
                if (!g.has_edge(xi, yp[i]) || !g.has_edge(xnext, yp[i])) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(yp.begin(), yp.end()));
    } while (std::next_permutation(xp.begin(), xp.end()));
    return false;
}

template <typename Fn>
void for_each_subset(int n, int k, Fn &&fn) {
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    if (k > n) return;
    while (true) {
        fn(subset);
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
}

}  // namespace

bool has_cycle(const BipartiteGraph &g, int length) {
    const int k = length / 2;
    if (k > g.n1() || k > g.n2() || k < 2) return false;

    // peel to the 2-core first: vertices of degree < 2 lie on no cycle
    std::vector<bool> alive_x(g.n1(), true), alive_y(g.n2(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < g.n1(); ++x) {
            if (!alive_x[x]) continue;
            int deg = 0;
            for (int y = 0; y < g.n2(); ++y) deg += (alive_y[y] && g.has_edge(x, y));
            if (deg < 2) {
                alive_x[x] = false;
                changed = true;
            }
        }
        for (int y = 0; y < g.n2(); ++y) {
            if (!alive_y[y]) continue;
            int deg = 0;
            for (int x = 0; x < g.n1(); ++x) deg += (alive_x[x] && g.has_edge(x, y));
            if (deg < 2) {
                alive_y[y] = false;
                changed = true;
            }
        }
    }
    std::vector<int> core_x, core_y;
    for (int x = 0; x < g.n1(); ++x)
        if (alive_x[x]) core_x.push_back(x);
    for (int y = 0; y < g.n2(); ++y)
        if (alive_y[y]) core_y.push_back(y);
    if (k > int(core_x.size()) || k > int(core_y.size())) return false;

    bool found = false;
    for_each_subset(int(core_x.size()), k, [&](const std::vector<int> &xi) {
        if (found) return;
        std::vector<int> xs;
        for (int i : xi) xs.push_back(core_x[i]);
        for_each_subset(int(core_y.size()), k, [&](const std::vector<int> &yi) {
            if (found) return;
            std::vector<int> ys;
            for (int j : yi) ys.push_back(core_y[j]);
            if (hamilton_cycle_exists(g, xs, ys)) found = true;
        });
    });
    return found;
}

std::vector<int> spectrum(const BipartiteGraph &g, int max_len) {
    std::vector<int> present;
    for (int len = 4; len <= max_len; len += 2)
        if (has_cycle(g, len)) present.push_back(len);
    return present;
}

bool contains_target(const BipartiteGraph &mono, const Target &t) {
    if (t.degenerate()) return true;
    if (t.kind() == TargetKind::connected_matching)
        return max_connected_matching(mono) >= t.param();
    return has_cycle(mono, t.param());
}

bool arrows(const BipartiteGraph &g, const Target &t_red, const Target &t_blue) {
    const std::vector<Edge> edges = g.edges();
    const int e = int(edges.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << e); ++mask) {
        std::vector<Edge> red, blue;
        for (int i = 0; i < e; ++i)
            ((mask >> i) & 1u ? red : blue).push_back(edges[i]);
        const BipartiteGraph red_g = BipartiteGraph::from_edge_list(g.n1(), g.n2(), red);
        if (contains_target(red_g, t_red)) continue;
        const BipartiteGraph blue_g = BipartiteGraph::from_edge_list(g.n1(), g.n2(), blue);
        if (contains_target(blue_g, t_blue)) continue;
        return false;  // bad coloring found
    }
    return true;
}

std::string brute_canonical_bytes(const BipartiteGraph &g) {
    std::string header;
    header.push_back(char(g.n1()));
    header.push_back(char(g.n2()));
    if (g.n1() == 0 || g.n2() == 0) return header;
    std::vector<int> xp(g.n1()), yp(g.n2());
    std::iota(xp.begin(), xp.end(), 0);
    std::string best;
    do {
        std::iota(yp.begin(), yp.end(), 0);
        do {
            std::string bits;
            bits.reserve(std::size_t(g.n1()) * g.n2());
            for (int i = 0; i < g.n1(); ++i)
                for (int j = 0; j < g.n2(); ++j)
                    bits.push_back(g.has_edge(xp[i], yp[j]) ? '1' : '0');
            if (best.empty() || bits < best) best = bits;
        } while (std::next_permutation(yp.begin(), yp.end()));
    } while (std::next_permutation(xp.begin(), xp.end()));
    return header + best;
}

unsigned long long burnside_class_count(int a, int b) {
    std::vector<std::vector<int>> perms_a, perms_b;
    std::vector<int> p(a);
    std::iota(p.begin(), p.end(), 0);
    do perms_a.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    p.assign(b, 0);
    std::iota(p.begin(), p.end(), 0);
    do perms_b.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    // sum of 2^(cycles of the induced action on the a*b cells)
    unsigned long long total = 0;
    for (const auto &pa : perms_a)
        for (const auto &pb : perms_b) {
            std::vector<bool> seen(std::size_t(a) * b, false);
            int cycles = 0;
            for (int c = 0; c < a * b; ++c) {
                if (seen[c]) continue;
                ++cycles;
                int v = c;
                while (!seen[v]) {
                    seen[v] = true;
                    v = pa[v / b] * b + pb[v % b];
                }
            }
            total += 1ULL << cycles;
        }
    return total / (perms_a.size() * perms_b.size());
}

}  // namespace biparrow::oracles
