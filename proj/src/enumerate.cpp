#include "biparrow/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace biparrow {

std::string CanonicalForm::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

namespace {

// Minimal row-major adjacency encoding over independent row and column
// permutations. For a fixed row order the optimal column arrangement is
// forced greedily: columns start as one cell, each placed row puts the
// cell's non-neighbors before its neighbors and splits the cell, so a row's
// contribution is determined by its ones-count per cell (its "code"). The
// search walks row orders whose code is minimal at every level, keeping the
// best full code sequence found so far.
//
// Invariant: best_ is always a prefix of the minimum over the explored part
// of the tree, and whenever best_.size() > level the current path's codes
// equal best_[0..level). A worse level code prunes, a better one truncates
// best_ and rebuilds it below. True twin rows (equal bitmasks) lead to
// identical subtrees and are explored once.
struct CanonSearch {
    int n1, n2;
    std::vector<std::uint64_t> rows;
    std::vector<std::vector<int>> best_;  // per level: popcount per cell

    explicit CanonSearch(const BipartiteGraph &g) : n1(g.n1()), n2(g.n2()) {
        rows.reserve(n1);
        for (int x = 0; x < n1; ++x) rows.push_back(g.x_row(x));
    }

    // Within a cell the pattern is 0^z 1^o, so fewer ones sorts first.
    static int compare_codes(const std::vector<int> &a, const std::vector<int> &b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    void search(const std::vector<std::uint64_t> &cells, std::vector<int> &placed) {
        const int level = int(placed.size());
        if (level == n1) return;

        std::vector<int> min_code;
        std::vector<int> minimal;
        std::vector<std::uint64_t> seen_masks;
        std::vector<int> codes;
        for (int r = 0; r < n1; ++r) {
            if (std::find(placed.begin(), placed.end(), r) != placed.end()) continue;
            codes.clear();
            for (std::uint64_t cell : cells) codes.push_back(std::popcount(rows[r] & cell));
            const int cmp = minimal.empty() ? -1 : compare_codes(codes, min_code);
            if (cmp < 0) {
                min_code = codes;
                minimal.assign(1, r);
                seen_masks.assign(1, rows[r]);
            } else if (cmp == 0 &&
                       std::find(seen_masks.begin(), seen_masks.end(), rows[r]) ==
                           seen_masks.end()) {
                minimal.push_back(r);
                seen_masks.push_back(rows[r]);
            }
        }

        if (int(best_.size()) > level) {
            const int cmp = compare_codes(min_code, best_[level]);
            if (cmp > 0) return;
            if (cmp < 0) best_.resize(level);
        }
        if (int(best_.size()) == level) best_.push_back(min_code);

        for (int r : minimal) {
            std::vector<std::uint64_t> next_cells;
            next_cells.reserve(cells.size() + 4);
            for (std::uint64_t cell : cells) {
                const std::uint64_t ones = cell & rows[r];
                const std::uint64_t zeros = cell & ~rows[r];
                if (zeros) next_cells.push_back(zeros);
                if (ones) next_cells.push_back(ones);
            }
            placed.push_back(r);
            search(next_cells, placed);
            placed.pop_back();
        }
    }
};

std::string encode_min(const BipartiteGraph &g) {
    std::string header;
    header.push_back(char(g.n1()));
    header.push_back(char(g.n2()));
    if (g.n1() == 0 || g.n2() == 0) return header;

    CanonSearch search(g);
    const std::vector<std::uint64_t> cells{
        (g.n2() >= 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.n2()) - 1)};
    std::vector<int> placed;
    search.search(cells, placed);

    // Rebuild the canonical bit rows from the winning code sequence; the
    // cell sizes evolve the same way the column partition did.
    std::string out = header;
    std::vector<int> cell_sizes{g.n2()};
    for (const std::vector<int> &codes : search.best_) {
        std::vector<int> next_sizes;
        for (std::size_t i = 0; i < codes.size(); ++i) {
            const int ones = codes[i];
            const int zeros = cell_sizes[i] - ones;
            out.append(zeros, '0');
            out.append(ones, '1');
            if (zeros) next_sizes.push_back(zeros);
            if (ones) next_sizes.push_back(ones);
        }
        cell_sizes = std::move(next_sizes);
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const BipartiteGraph &g, bool allow_side_swap) {
    if (!allow_side_swap) return CanonicalForm{encode_min(g)};

    auto transpose = [](const BipartiteGraph &graph) {
        std::vector<Edge> edges;
        for (const Edge &e : graph.edges()) edges.push_back({e.y, e.x});
        return BipartiteGraph::from_edge_list(graph.n2(), graph.n1(), edges);
    };
    if (g.n1() < g.n2()) return CanonicalForm{encode_min(g)};
    if (g.n2() < g.n1()) return CanonicalForm{encode_min(transpose(g))};
    return CanonicalForm{std::min(encode_min(g), encode_min(transpose(g)))};
}

std::vector<BipartiteGraph> dense_family(int n, int delta_min) {
    if (n < 1 || n > BipartiteGraph::max_side)
        throw std::invalid_argument("dense_family: bad side size");
    const int c = n - delta_min;
    if (c < 0) return {};  // threshold above n: empty family, no interpretation
    if (c > 2) throw FamilyTooLarge("family too large; use sampling");

    // Enumerate complements (max degree <= c) by levelwise edge augmentation
    // with canonical de-duplication, then complement back.
    struct Member {
        std::vector<Edge> edges;
        CanonicalForm form;
    };
    std::vector<Member> level{{{}, canonical_form(BipartiteGraph::from_edge_list(n, n, {}), true)}};
    std::vector<Member> all = level;

    const int max_edges = c * n;
    for (int e = 0; e < max_edges && !level.empty(); ++e) {
        std::vector<Member> next;
        std::set<std::string> seen;
        for (const Member &member : level) {
            std::vector<int> deg_x(n, 0), deg_y(n, 0);
            for (const Edge &edge : member.edges) {
                ++deg_x[edge.x];
                ++deg_y[edge.y];
            }
            for (int x = 0; x < n; ++x) {
                if (deg_x[x] >= c) continue;
                for (int y = 0; y < n; ++y) {
                    if (deg_y[y] >= c) continue;
                    const Edge candidate{x, y};
                    if (std::find(member.edges.begin(), member.edges.end(), candidate) !=
                        member.edges.end())
                        continue;
                    std::vector<Edge> edges = member.edges;
                    edges.push_back(candidate);
                    const BipartiteGraph h = BipartiteGraph::from_edge_list(n, n, edges);
                    CanonicalForm form = canonical_form(h, true);
                    if (seen.insert(form.bytes).second)
                        next.push_back({std::move(edges), std::move(form)});
                }
            }
        }
        level = std::move(next);
        all.insert(all.end(), level.begin(), level.end());
    }

    std::sort(all.begin(), all.end(), [](const Member &a, const Member &b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
        return a.form < b.form;
    });
    std::vector<BipartiteGraph> family;
    family.reserve(all.size());
    for (const Member &member : all)
        family.push_back(BipartiteGraph::from_edge_list(n, n, member.edges).complement());
    return family;
}

BipartiteGraph random_graph_with_min_degree(int n, int delta_min, std::uint64_t seed) {
    if (n < 1 || n > BipartiteGraph::max_side)
        throw std::invalid_argument("random_graph_with_min_degree: bad side size");
    if (delta_min > n)
        throw std::invalid_argument("random_graph_with_min_degree: delta_min exceeds n");
    const int c = n - delta_min;
    std::mt19937_64 rng(seed);
    // complement density tuned so the max-degree bound is hit often
    const double p = (c == 0) ? 0.0 : double(c) / (2.0 * n);
    std::bernoulli_distribution coin(p);
    while (true) {
        std::vector<Edge> complement_edges;
        std::vector<int> deg_x(n, 0), deg_y(n, 0);
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                if (p > 0 && coin(rng)) {
                    complement_edges.push_back({x, y});
                    if (++deg_x[x] > c || ++deg_y[y] > c) ok = false;
                }
        if (!ok) continue;
        return BipartiteGraph::from_edge_list(n, n, complement_edges).complement();
    }
}

}  // namespace biparrow
