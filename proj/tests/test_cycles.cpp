#include <doctest.h>

#include "biparrow/cycles.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace biparrow;

namespace {

BipartiteGraph cycle_graph(int length) {
    // C_{2k} with X = {0..k-1}, Y = {0..k-1}: x_i - y_i - x_{i+1}
    const int k = length / 2;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        edges.push_back({i, i});
        edges.push_back({(i + 1) % k, i});
    }
    return BipartiteGraph::from_edge_list(k, k, edges);
}

}  // namespace

TEST_CASE("has_cycle on the worked examples") {
    const BipartiteGraph k22 = BipartiteGraph::complete(2, 2);
    CHECK(has_cycle(k22, 4).has_value());
    CHECK(!has_cycle(k22, 6).has_value());
    CHECK(has_cycle(BipartiteGraph::complete(3, 3), 6).has_value());

    CHECK_THROWS_AS(has_cycle(k22, 3), std::invalid_argument);
    CHECK_THROWS_AS(has_cycle(k22, 2), std::invalid_argument);
    CHECK_THROWS_AS(has_cycle(k22, 0), std::invalid_argument);
}

TEST_CASE("returned witnesses are verified simple closed cycles") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const BipartiteGraph g =
            testing::random_graph(rng, 2 + int(rng() % 5), 2 + int(rng() % 5), 0.5);
        for (int len = 4; len <= 10; len += 2) {
            const auto witness = has_cycle(g, len);
            if (witness) CHECK(verify_cycle(g, *witness, len));
        }
    }
    // verify_cycle rejects corrupted witnesses
    const BipartiteGraph k33 = BipartiteGraph::complete(3, 3);
    auto w = has_cycle(k33, 6);
    REQUIRE(w.has_value());
    CycleWitness broken = *w;
    broken[2] = broken[0];  // repeated vertex
    CHECK(!verify_cycle(k33, broken, 6));
    CHECK(!verify_cycle(k33, *w, 4));  // wrong length
}

TEST_CASE("spectrum on the worked examples") {
    CHECK(spectrum(cycle_graph(8), 8).present == std::vector<int>{8});
    CHECK(spectrum(BipartiteGraph::complete(3, 3), 8).present == std::vector<int>{4, 6});

    // K_{4,4} minus a perfect matching
    std::vector<Edge> edges;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (x != y) edges.push_back({x, y});
    const BipartiteGraph g = BipartiteGraph::from_edge_list(4, 4, edges);
    CHECK(spectrum(g, 8).present == std::vector<int>{4, 6, 8});
    CHECK(spectrum(g, 8).present == oracles::spectrum(g, 8));
}

TEST_CASE("spectrum agrees with the subset-enumeration oracle") {
    std::mt19937_64 rng(47);
    // exhaustive up to 3+3
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= 3; ++n2)
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (n1 * n2)); ++mask) {
                const BipartiteGraph g = testing::graph_from_mask(n1, n2, mask);
                CHECK(spectrum(g, 6).present == oracles::spectrum(g, 6));
            }
    // sampled up to 5+5
    for (int trial = 0; trial < 300; ++trial) {
        const int n1 = 1 + int(rng() % 5), n2 = 1 + int(rng() % 5);
        const BipartiteGraph g = testing::random_graph(rng, n1, n2, 0.2 + 0.1 * (trial % 7));
        CHECK(spectrum(g, 10).present == oracles::spectrum(g, 10));
    }
}

TEST_CASE("spectrum is monotone under edge addition") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const int n1 = 2 + int(rng() % 4), n2 = 2 + int(rng() % 4);
        const BipartiteGraph g = testing::random_graph(rng, n1, n2, 0.4);
        std::vector<Edge> missing;
        for (int x = 0; x < n1; ++x)
            for (int y = 0; y < n2; ++y)
                if (!g.has_edge(x, y)) missing.push_back({x, y});
        if (missing.empty()) continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(missing[rng() % missing.size()]);
        const BipartiteGraph h = BipartiteGraph::from_edge_list(n1, n2, edges);
        const CycleSpectrum before = spectrum(g, 8), after = spectrum(h, 8);
        for (int len : before.present) CHECK(after.contains(len));
    }
}
