#include "biparrow/bipartite_graph.hpp"

#include <bit>
#include <stdexcept>

namespace biparrow {

BipartiteGraph::BipartiteGraph(int n1, int n2) : n1_(n1), n2_(n2), xrows_(n1, 0), yrows_(n2, 0) {}

BipartiteGraph BipartiteGraph::from_edge_list(int n1, int n2, const std::vector<Edge> &edges) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("bipartite graph: negative side size");
    if (n1 > max_side || n2 > max_side)
        throw std::invalid_argument("bipartite graph: side size exceeds " +
                                    std::to_string(max_side));
    BipartiteGraph g(n1, n2);
    for (const Edge &e : edges) {
        if (e.x < 0 || e.x >= n1 || e.y < 0 || e.y >= n2)
            throw std::invalid_argument("edge (" + std::to_string(e.x) + ", " +
                                        std::to_string(e.y) + ") out of range for " +
                                        std::to_string(n1) + "+" + std::to_string(n2) +
                                        " graph");
        g.xrows_[e.x] |= std::uint64_t(1) << e.y;
        g.yrows_[e.y] |= std::uint64_t(1) << e.x;
    }
    return g;
}

BipartiteGraph BipartiteGraph::complete(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("complete bipartite graph: sides must be >= 1");
    if (n1 > max_side || n2 > max_side)
        throw std::invalid_argument("bipartite graph: side size exceeds " +
                                    std::to_string(max_side));
    BipartiteGraph g(n1, n2);
    const std::uint64_t full_y = (n2 == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n2) - 1);
    const std::uint64_t full_x = (n1 == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n1) - 1);
    for (int x = 0; x < n1; ++x) g.xrows_[x] = full_y;
    for (int y = 0; y < n2; ++y) g.yrows_[y] = full_x;
    return g;
}

BipartiteGraph BipartiteGraph::complement() const {
    BipartiteGraph g(n1_, n2_);
    const std::uint64_t full_y = (n2_ == 64) ? ~std::uint64_t(0)
                                             : ((std::uint64_t(1) << n2_) - 1);
    const std::uint64_t full_x = (n1_ == 64) ? ~std::uint64_t(0)
                                             : ((std::uint64_t(1) << n1_) - 1);
    for (int x = 0; x < n1_; ++x) g.xrows_[x] = ~xrows_[x] & full_y;
    for (int y = 0; y < n2_; ++y) g.yrows_[y] = ~yrows_[y] & full_x;
    return g;
}

int BipartiteGraph::degree_x(int x) const { return std::popcount(xrows_[x]); }
int BipartiteGraph::degree_y(int y) const { return std::popcount(yrows_[y]); }

int BipartiteGraph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : xrows_) total += std::popcount(row);
    return total;
}

int BipartiteGraph::min_degree() const {
    if (n1_ == 0 && n2_ == 0) throw std::domain_error("min_degree: graph has no vertices");
    int d = max_side + 1;
    for (int x = 0; x < n1_; ++x) d = std::min(d, degree_x(x));
    for (int y = 0; y < n2_; ++y) d = std::min(d, degree_y(y));
    return d;
}

bool BipartiteGraph::is_complete() const {
    return edge_count() == n1_ * n2_;
}

bool BipartiteGraph::is_edgeless() const {
    for (std::uint64_t row : xrows_)
        if (row) return false;
    return true;
}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (int x = 0; x < n1_; ++x) {
        std::uint64_t row = xrows_[x];
        while (row) {
            int y = std::countr_zero(row);
            out.push_back({x, y});
            row &= row - 1;
        }
    }
    return out;
}

bool BipartiteGraph::transpose_consistent() const {
    for (int x = 0; x < n1_; ++x)
        for (int y = 0; y < n2_; ++y)
            if (((xrows_[x] >> y) & 1u) != ((yrows_[y] >> x) & 1u)) return false;
    return true;
}

InducedSubgraph induced_subgraph(const BipartiteGraph &g, const std::vector<int> &xs,
                                 const std::vector<int> &ys) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int x = xs[i];
        if (x < 0 || x >= g.n1()) throw std::invalid_argument("induced_subgraph: X index out of range");
        for (std::size_t j = 0; j < ys.size(); ++j) {
            const int y = ys[j];
            if (y < 0 || y >= g.n2())
                throw std::invalid_argument("induced_subgraph: Y index out of range");
            if (g.has_edge(x, y)) edges.push_back({int(i), int(j)});
        }
    }
    return InducedSubgraph{
        BipartiteGraph::from_edge_list(int(xs.size()), int(ys.size()), edges), xs, ys};
}

}  // namespace biparrow
