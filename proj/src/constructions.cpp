#include "biparrow/constructions.hpp"

#include <stdexcept>

namespace biparrow {

namespace {

void claim(WitnessReport &report, const std::string &quantity, long expected, long computed) {
    report.claims.push_back({quantity, expected, computed, expected == computed});
}

void finish(WitnessReport &report) {
    report.all_pass = true;
    for (const WitnessClaim &c : report.claims) report.all_pass = report.all_pass && c.pass;
}

}  // namespace

WitnessReport split_witness(int m, int n) {
    if (n < 1 || m <= n)
        throw std::invalid_argument("split_witness: requires m > n >= 1");
    const int N = m + n - 2;
    auto graph = std::make_shared<const BipartiteGraph>(BipartiteGraph::complete(N, N));
    EdgeColoring coloring(graph);
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y)
            coloring.set(x, y, x < m - 1 ? Color::red : Color::blue);

    WitnessReport report{graph, std::move(coloring), {}, false};
    const ConnectedMatching red = max_connected_matching(report.coloring.mono_subgraph(Color::red));
    const ConnectedMatching blue =
        max_connected_matching(report.coloring.mono_subgraph(Color::blue));
    claim(report, "red_max_connected_matching", m - 1, red.size);
    claim(report, "blue_max_connected_matching", n - 1, blue.size);
    finish(report);
    return report;
}

WitnessReport construction_one(int m, int n) {
    if ((m + n - 1) % 4 != 0)
        throw std::invalid_argument(
            "construction_one: requires (m+n-1) divisible by 4, got m+n-1 = " +
            std::to_string(m + n - 1));
    if (!(n < m))
        throw std::invalid_argument("construction_one: requires n < m");
    if (!(m < 3 * n))
        throw std::invalid_argument("construction_one: requires m < 3n");

    const int N = m + n - 1;
    const int s = N / 4;
    auto block = [&](int v) { return v / s; };  // 0..3, consecutive index ranges

    std::vector<Edge> edges;
    std::vector<std::pair<Edge, Color>> colors;
    for (int x = 0; x < N; ++x) {
        const int bx = block(x);
        for (int y = 0; y < N; ++y) {
            const int by = block(y);
            // X_1, X_2 see Y_i u Y_3 u Y_4; X_3, X_4 see Y_1 u Y_2 u Y_i
            const bool present = (bx <= 1) ? (by == bx || by >= 2) : (by <= 1 || by == bx);
            if (!present) continue;
            edges.push_back({x, y});
            colors.push_back({{x, y}, by == bx ? Color::blue : Color::red});
        }
    }
    auto graph = std::make_shared<const BipartiteGraph>(
        BipartiteGraph::from_edge_list(N, N, edges));
    EdgeColoring coloring(graph);
    for (const auto &[e, c] : colors) coloring.set(e.x, e.y, c);

    WitnessReport report{graph, std::move(coloring), {}, false};
    claim(report, "min_degree", 3L * N / 4, report.graph->min_degree());
    const ConnectedMatching red = max_connected_matching(report.coloring.mono_subgraph(Color::red));
    const ConnectedMatching blue =
        max_connected_matching(report.coloring.mono_subgraph(Color::blue));
    claim(report, "red_max_connected_matching", N / 2, red.size);
    claim(report, "blue_max_connected_matching", N / 4, blue.size);
    finish(report);
    return report;
}

bool verify_witness(const WitnessReport &report, const Target &t_red, const Target &t_blue) {
    if (!report.coloring.is_total())
        throw std::invalid_argument("verify_witness: coloring is not total");
    return !contains_target(report.coloring, Color::red, t_red).found &&
           !contains_target(report.coloring, Color::blue, t_blue).found;
}

}  // namespace biparrow
