#include "biparrow/matching.hpp"

#include <algorithm>
#include <bit>

namespace biparrow {

namespace {

constexpr int kNil = -1;

// One Hopcroft-Karp phase: BFS layers from unmatched X, then layered DFS
// augmentations. Restricted to vertices inside (xmask, ymask).
struct HopcroftKarp {
    const BipartiteGraph &g;
    std::uint64_t xmask, ymask;
    std::vector<int> mate_x, mate_y;  // full-size arrays, kNil = unmatched
    std::vector<int> dist;

    HopcroftKarp(const BipartiteGraph &graph, std::uint64_t xm, std::uint64_t ym)
        : g(graph), xmask(xm), ymask(ym), mate_x(graph.n1(), kNil), mate_y(graph.n2(), kNil),
          dist(graph.n1(), 0) {}

    bool bfs() {
        std::vector<int> queue;
        bool found_free_y = false;
        for (int x = 0; x < g.n1(); ++x) {
            if (!((xmask >> x) & 1u)) { dist[x] = kNil; continue; }
            if (mate_x[x] == kNil) {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = kNil;
            }
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int x = queue[head];
            std::uint64_t row = g.x_row(x) & ymask;
            while (row) {
                const int y = std::countr_zero(row);
                row &= row - 1;
                const int nx = mate_y[y];
                if (nx == kNil) {
                    found_free_y = true;
                } else if (dist[nx] == kNil) {
                    dist[nx] = dist[x] + 1;
                    queue.push_back(nx);
                }
            }
        }
        return found_free_y;
    }

    bool dfs(int x) {
        std::uint64_t row = g.x_row(x) & ymask;
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            const int nx = mate_y[y];
            if (nx == kNil || (dist[nx] == dist[x] + 1 && dfs(nx))) {
                mate_x[x] = y;
                mate_y[y] = x;
                return true;
            }
        }
        dist[x] = kNil;
        return false;
    }

    // Runs phases until maximum or until the matching size reaches cap.
    int run(int cap) {
        int size = 0;
        while ((cap < 0 || size < cap) && bfs()) {
            for (int x = 0; x < g.n1(); ++x) {
                if (!((xmask >> x) & 1u)) continue;
                if (mate_x[x] == kNil && dfs(x)) {
                    ++size;
                    if (cap >= 0 && size >= cap) return size;
                }
            }
        }
        return size;
    }
};

std::uint64_t full_mask(int n) {
    return (n >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}

}  // namespace

int matching_within(const BipartiteGraph &g, std::uint64_t xmask, std::uint64_t ymask, int cap,
                    std::vector<Edge> *out_edges) {
    HopcroftKarp hk(g, xmask, ymask);
    const int size = hk.run(cap);
    if (out_edges) {
        out_edges->clear();
        for (int x = 0; x < g.n1(); ++x)
            if (hk.mate_x[x] != kNil) out_edges->push_back({x, hk.mate_x[x]});
    }
    return size;
}

MatchingResult maximum_matching(const BipartiteGraph &g) {
    HopcroftKarp hk(g, full_mask(g.n1()), full_mask(g.n2()));
    MatchingResult result;
    result.size = hk.run(-1);

    for (int x = 0; x < g.n1(); ++x)
        if (hk.mate_x[x] != kNil) result.matching.push_back({x, hk.mate_x[x]});

    // Koenig construction: alternating reachability from unmatched X-vertices
    // (non-matching edges X->Y, matching edges Y->X).
    std::vector<bool> zx(g.n1(), false), zy(g.n2(), false);
    std::vector<int> queue;
    for (int x = 0; x < g.n1(); ++x)
        if (hk.mate_x[x] == kNil) {
            zx[x] = true;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        std::uint64_t row = g.x_row(x);
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            if (hk.mate_x[x] == y) continue;  // only non-matching edges forward
            if (!zy[y]) {
                zy[y] = true;
                const int nx = hk.mate_y[y];
                if (nx != kNil && !zx[nx]) {
                    zx[nx] = true;
                    queue.push_back(nx);
                }
            }
        }
    }
    for (int x = 0; x < g.n1(); ++x)
        if (!zx[x]) result.cover.push_back({Side::X, x});
    for (int y = 0; y < g.n2(); ++y)
        if (zy[y]) result.cover.push_back({Side::Y, y});
    return result;
}

ComponentDecomposition components(const BipartiteGraph &g) {
    ComponentDecomposition d;
    d.x_comp.assign(g.n1(), kNil);
    d.y_comp.assign(g.n2(), kNil);

    auto bfs_from = [&](Side side, int start, int id) {
        ComponentSize size;
        std::vector<VertexRef> queue{{side, start}};
        if (side == Side::X) {
            d.x_comp[start] = id;
            size.x_count = 1;
        } else {
            d.y_comp[start] = id;
            size.y_count = 1;
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexRef v = queue[head];
            if (v.side == Side::X) {
                std::uint64_t row = g.x_row(v.index);
                while (row) {
                    const int y = std::countr_zero(row);
                    row &= row - 1;
                    if (d.y_comp[y] == kNil) {
                        d.y_comp[y] = id;
                        ++size.y_count;
                        queue.push_back({Side::Y, y});
                    }
                }
            } else {
                std::uint64_t row = g.y_row(v.index);
                while (row) {
                    const int x = std::countr_zero(row);
                    row &= row - 1;
                    if (d.x_comp[x] == kNil) {
                        d.x_comp[x] = id;
                        ++size.x_count;
                        queue.push_back({Side::X, x});
                    }
                }
            }
        }
        return size;
    };

    for (int x = 0; x < g.n1(); ++x)
        if (d.x_comp[x] == kNil) d.sizes.push_back(bfs_from(Side::X, x, int(d.sizes.size())));
    for (int y = 0; y < g.n2(); ++y)
        if (d.y_comp[y] == kNil) d.sizes.push_back(bfs_from(Side::Y, y, int(d.sizes.size())));
    return d;
}

namespace {

// Per-component vertex masks, indexed by component id.
struct ComponentMasks {
    std::vector<std::uint64_t> xmask, ymask;
};

ComponentMasks component_masks(const BipartiteGraph &g, const ComponentDecomposition &d) {
    ComponentMasks m;
    m.xmask.assign(d.count(), 0);
    m.ymask.assign(d.count(), 0);
    for (int x = 0; x < g.n1(); ++x) m.xmask[d.x_comp[x]] |= std::uint64_t(1) << x;
    for (int y = 0; y < g.n2(); ++y) m.ymask[d.y_comp[y]] |= std::uint64_t(1) << y;
    return m;
}

}  // namespace

ConnectedMatching max_connected_matching(const BipartiteGraph &g) {
    const ComponentDecomposition d = components(g);
    const ComponentMasks masks = component_masks(g, d);
    ConnectedMatching best;
    if (d.count() > 0) best.component = 0;
    for (int c = 0; c < d.count(); ++c) {
        const int bound = std::min(d.sizes[c].x_count, d.sizes[c].y_count);
        if (bound <= best.size) continue;  // cannot beat current best
        const int size = matching_within(g, masks.xmask[c], masks.ymask[c], -1);
        if (size > best.size) {
            best.size = size;
            best.component = c;
        }
    }
    return best;
}

bool has_connected_matching(const BipartiteGraph &g, int k, std::vector<Edge> *witness) {
    if (k <= 0) {
        if (witness) witness->clear();
        return true;
    }
    const ComponentDecomposition d = components(g);
    const ComponentMasks masks = component_masks(g, d);
    for (int c = 0; c < d.count(); ++c) {
        if (std::min(d.sizes[c].x_count, d.sizes[c].y_count) < k) continue;
        std::vector<Edge> edges;
        const int size = matching_within(g, masks.xmask[c], masks.ymask[c], k,
                                         witness ? &edges : nullptr);
        if (size >= k) {
            if (witness) {
                edges.resize(k);
                *witness = std::move(edges);
            }
            return true;
        }
    }
    return false;
}

ComponentProfile largest_component_profile(const BipartiteGraph &g) {
    const ComponentDecomposition d = components(g);
    ComponentProfile p;
    if (d.count() == 0) return p;
    p.max_min_side_component = 0;
    p.max_total_component = 0;
    for (int c = 0; c < d.count(); ++c) {
        const int min_side = std::min(d.sizes[c].x_count, d.sizes[c].y_count);
        if (min_side > p.max_min_side) {
            p.max_min_side = min_side;
            p.max_min_side_component = c;
        }
        if (d.sizes[c].total() > p.max_total) {
            p.max_total = d.sizes[c].total();
            p.max_total_component = c;
        }
    }
    return p;
}

}  // namespace biparrow
