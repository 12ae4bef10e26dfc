#include "biparrow/coloring.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace biparrow {

Target Target::parse(const std::string &spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("target '" + spec + "': expected cm:<k> or cycle:<2k>");
    const std::string kind = spec.substr(0, colon);
    int value = 0;
    try {
        std::size_t pos = 0;
        value = std::stoi(spec.substr(colon + 1), &pos);
        if (pos != spec.size() - colon - 1) throw std::invalid_argument("");
    } catch (const std::exception &) {
        throw std::invalid_argument("target '" + spec + "': bad number");
    }
    if (kind == "cm") return connected_matching(value);
    if (kind == "cycle") return even_cycle(value);
    throw std::invalid_argument("target '" + spec + "': unknown kind '" + kind + "'");
}

EdgeColoring::EdgeColoring(std::shared_ptr<const BipartiteGraph> base)
    : base_(std::move(base)), red_(base_->n1(), 0), blue_(base_->n1(), 0) {}

void EdgeColoring::set(int x, int y, Color c) {
    if (x < 0 || x >= base_->n1() || y < 0 || y >= base_->n2() || !base_->has_edge(x, y))
        throw std::invalid_argument("coloring: (" + std::to_string(x) + ", " +
                                    std::to_string(y) + ") is not a base edge");
    const std::uint64_t bit = std::uint64_t(1) << y;
    if (c == Color::red) {
        if (blue_[x] & bit)
            throw std::invalid_argument("coloring: edge already blue, unset first");
        red_[x] |= bit;
    } else {
        if (red_[x] & bit)
            throw std::invalid_argument("coloring: edge already red, unset first");
        blue_[x] |= bit;
    }
}

void EdgeColoring::unset(int x, int y) {
    const std::uint64_t bit = std::uint64_t(1) << y;
    red_[x] &= ~bit;
    blue_[x] &= ~bit;
}

std::optional<Color> EdgeColoring::get(int x, int y) const {
    const std::uint64_t bit = std::uint64_t(1) << y;
    if (red_[x] & bit) return Color::red;
    if (blue_[x] & bit) return Color::blue;
    return std::nullopt;
}

int EdgeColoring::count(Color c) const {
    const auto &rows = (c == Color::red) ? red_ : blue_;
    int total = 0;
    for (std::uint64_t row : rows) total += std::popcount(row);
    return total;
}

bool EdgeColoring::is_total() const {
    for (int x = 0; x < base_->n1(); ++x)
        if ((red_[x] | blue_[x]) != base_->x_row(x)) return false;
    return true;
}

BipartiteGraph EdgeColoring::mono_subgraph(Color c) const {
    const auto &rows = (c == Color::red) ? red_ : blue_;
    std::vector<Edge> edges;
    for (int x = 0; x < base_->n1(); ++x) {
        std::uint64_t row = rows[x];
        while (row) {
            const int y = std::countr_zero(row);
            row &= row - 1;
            edges.push_back({x, y});
        }
    }
    return BipartiteGraph::from_edge_list(base_->n1(), base_->n2(), edges);
}

std::vector<Edge> EdgeColoring::edges_of(Color c) const {
    return mono_subgraph(c).edges();
}

TargetCheck contains_target(const EdgeColoring &c, Color color, const Target &t) {
    TargetCheck check;
    if (t.degenerate()) {
        check.found = true;
        check.degenerate = true;
        return check;
    }
    const BipartiteGraph mono = c.mono_subgraph(color);
    if (t.kind() == TargetKind::connected_matching) {
        std::vector<Edge> witness;
        if (has_connected_matching(mono, t.param(), &witness)) {
            check.found = true;
            check.witness.matching = std::move(witness);
        }
    } else {
        if (auto cycle = has_cycle(mono, t.param())) {
            check.found = true;
            check.witness.cycle = std::move(*cycle);
        }
    }
    return check;
}

MonoProfiles mono_component_profile(const EdgeColoring &c) {
    return MonoProfiles{largest_component_profile(c.mono_subgraph(Color::red)),
                        largest_component_profile(c.mono_subgraph(Color::blue))};
}

LemmaReport check_lemma_conclusions(const EdgeColoring &c, int m, int n) {
    if (!c.base().is_balanced())
        throw std::invalid_argument("check_lemma_conclusions: base graph must be balanced");
    if (!c.is_total())
        throw std::invalid_argument("check_lemma_conclusions: coloring must be total");
    if (m < 1 || n < 1) throw std::invalid_argument("check_lemma_conclusions: m, n must be >= 1");

    const BipartiteGraph red = c.mono_subgraph(Color::red);
    const BipartiteGraph blue = c.mono_subgraph(Color::blue);

    LemmaReport report;
    report.red_component_m = largest_component_profile(red).max_min_side >= m;
    report.blue_component_n = largest_component_profile(blue).max_min_side >= n;
    report.disjunction_holds = report.red_component_m || report.blue_component_n;
    report.red_has_cm_m = has_connected_matching(red, m);

    if (!report.red_has_cm_m) {
        report.blue_meets_n = report.blue_component_n;
        if (report.blue_component_n) {
            // Largest qualifying blue component, ties broken by (min-side
            // size, total size, lowest id).
            const ComponentDecomposition decomp = components(blue);
            int best = -1, best_min = -1, best_total = -1;
            for (int id = 0; id < decomp.count(); ++id) {
                const int min_side = std::min(decomp.sizes[id].x_count, decomp.sizes[id].y_count);
                if (min_side < n) continue;
                const int total = decomp.sizes[id].total();
                if (min_side > best_min || (min_side == best_min && total > best_total)) {
                    best = id;
                    best_min = min_side;
                    best_total = total;
                }
            }
            std::vector<int> xs, ys;
            for (int x = 0; x < blue.n1(); ++x)
                if (decomp.x_comp[x] == best) xs.push_back(x);
            for (int y = 0; y < blue.n2(); ++y)
                if (decomp.y_comp[y] == best) ys.push_back(y);
            const InducedSubgraph sub = induced_subgraph(blue, xs, ys);
            const MatchingResult matching = maximum_matching(sub.graph);

            // B \ S in original indices; check they share one red component.
            const ComponentDecomposition red_decomp = components(red);
            int red_id = -1;
            bool one_component = true;
            auto visit = [&](Side side, int original) {
                const int id = (side == Side::X) ? red_decomp.x_comp[original]
                                                 : red_decomp.y_comp[original];
                if (red_id == -1)
                    red_id = id;
                else if (red_id != id)
                    one_component = false;
            };
            std::vector<bool> covered_x(sub.graph.n1(), false), covered_y(sub.graph.n2(), false);
            for (const VertexRef &v : matching.cover)
                (v.side == Side::X ? covered_x : covered_y)[v.index] = true;
            for (int i = 0; i < sub.graph.n1(); ++i)
                if (!covered_x[i]) visit(Side::X, sub.x_original[i]);
            for (int j = 0; j < sub.graph.n2(); ++j)
                if (!covered_y[j]) visit(Side::Y, sub.y_original[j]);

            LemmaReport::CoverEscape escape;
            escape.blue_component = best;
            escape.cover_size = matching.size;
            escape.in_one_red_component = one_component;
            report.cover_escape = escape;
        }
    }
    return report;
}

}  // namespace biparrow
