#include "biparrow/cycles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace biparrow {

bool verify_cycle(const BipartiteGraph &g, const CycleWitness &cycle, int length) {
    if (length < 4 || length % 2 != 0) return false;
    if (int(cycle.size()) != length) return false;
    std::uint64_t seen_x = 0, seen_y = 0;
    for (int i = 0; i < length; ++i) {
        const VertexRef v = cycle[i];
        const Side expected = (i % 2 == 0) ? Side::X : Side::Y;
        if (v.side != expected) return false;
        if (v.side == Side::X) {
            if (v.index < 0 || v.index >= g.n1()) return false;
            if ((seen_x >> v.index) & 1u) return false;
            seen_x |= std::uint64_t(1) << v.index;
        } else {
            if (v.index < 0 || v.index >= g.n2()) return false;
            if ((seen_y >> v.index) & 1u) return false;
            seen_y |= std::uint64_t(1) << v.index;
        }
    }
    for (int i = 0; i < length; ++i) {
        const VertexRef a = cycle[i];
        const VertexRef b = cycle[(i + 1) % length];
        const int x = (a.side == Side::X) ? a.index : b.index;
        const int y = (a.side == Side::X) ? b.index : a.index;
        if (!g.has_edge(x, y)) return false;
    }
    return true;
}

namespace {

// DFS for a cycle of exactly `length` through start X-vertex s, where every
// other X-vertex on the cycle has index > s. BFS distances back to s give a
// lower bound on the steps needed to close, used as a pruning cut.
struct CycleSearch {
    const BipartiteGraph &g;
    int length;
    int start;
    std::vector<int> dist_x, dist_y;  // BFS distance from start, -1 unreachable
    std::vector<int> path;            // interleaved x, y indices
    std::uint64_t used_x = 0, used_y = 0;

    CycleSearch(const BipartiteGraph &graph, int len, int s)
        : g(graph), length(len), start(s), dist_x(graph.n1(), -1), dist_y(graph.n2(), -1) {
        dist_x[start] = 0;
        std::vector<VertexRef> queue{{Side::X, start}};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const VertexRef v = queue[head];
            if (v.side == Side::X) {
                std::uint64_t row = g.x_row(v.index);
                while (row) {
                    const int y = std::countr_zero(row);
                    row &= row - 1;
                    if (dist_y[y] == -1) {
                        dist_y[y] = dist_x[v.index] + 1;
                        queue.push_back({Side::Y, y});
                    }
                }
            } else {
                std::uint64_t row = g.y_row(v.index);
                while (row) {
                    const int x = std::countr_zero(row);
                    row &= row - 1;
                    if (dist_x[x] == -1) {
                        dist_x[x] = dist_y[v.index] + 1;
                        queue.push_back({Side::X, x});
                    }
                }
            }
        }
    }

    // depth = edges used so far; current vertex is X-side iff depth is even.
    bool extend_from_x(int x, int depth) {
        std::uint64_t row = g.x_row(x) & ~used_y;
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            if (depth + 1 == length - 1) {
                // one step left: must be able to close via (start, y)
                if (g.has_edge(start, y)) {
                    path.push_back(y);
                    return true;
                }
                continue;
            }
            if (dist_y[y] == -1 || dist_y[y] > length - depth - 1) continue;
            if (g.degree_y(y) < 2) continue;
            used_y |= std::uint64_t(1) << y;
            path.push_back(y);
            if (extend_from_y(y, depth + 1)) return true;
            path.pop_back();
            used_y &= ~(std::uint64_t(1) << y);
        }
        return false;
    }

    bool extend_from_y(int y, int depth) {
        std::uint64_t row = g.y_row(y) & ~used_x;
        // intermediate X-vertices must have index > start
        row &= ~((std::uint64_t(2) << start) - 1);
        while (row) {
            const int x = std::countr_zero(row);
            row &= row - 1;
            if (dist_x[x] == -1 || dist_x[x] > length - depth - 1) continue;
            if (g.degree_x(x) < 2) continue;
            used_x |= std::uint64_t(1) << x;
            path.push_back(x);
            if (extend_from_x(x, depth + 1)) return true;
            path.pop_back();
            used_x &= ~(std::uint64_t(1) << x);
        }
        return false;
    }

    std::optional<CycleWitness> run() {
        if (g.degree_x(start) < 2) return std::nullopt;
        used_x = std::uint64_t(1) << start;
        path.assign(1, start);
        if (!extend_from_x(start, 0)) return std::nullopt;
        CycleWitness witness;
        for (std::size_t i = 0; i < path.size(); ++i)
            witness.push_back({(i % 2 == 0) ? Side::X : Side::Y, path[i]});
        return witness;
    }
};

}  // namespace

std::optional<CycleWitness> has_cycle(const BipartiteGraph &g, int length) {
    if (length < 4 || length % 2 != 0)
        throw std::invalid_argument("has_cycle: length must be even and >= 4");
    const int half = length / 2;
    if (half > g.n1() || half > g.n2()) return std::nullopt;
    for (int s = 0; s + half <= g.n1(); ++s) {
        CycleSearch search(g, length, s);
        if (auto witness = search.run()) {
            if (!verify_cycle(g, *witness, length))
                throw std::logic_error("has_cycle: produced witness failed verification");
            return witness;
        }
    }
    return std::nullopt;
}

CycleSpectrum spectrum(const BipartiteGraph &g, int max_len) {
    if (max_len < 4 || max_len % 2 != 0)
        throw std::invalid_argument("spectrum: max_len must be even and >= 4");
    CycleSpectrum s;
    s.max_len_checked = max_len;
    for (int len = 4; len <= max_len; len += 2) {
        if (auto witness = has_cycle(g, len)) {
            s.present.push_back(len);
            s.witnesses[len] = std::move(*witness);
        }
    }
    return s;
}

}  // namespace biparrow
