#include <doctest.h>

#include "biparrow/bipartite_graph.hpp"
#include "biparrow/constructions.hpp"
#include "test_helpers.hpp"

using namespace biparrow;

TEST_CASE("from_edge_list builds the de-duplicated edge set") {
    const BipartiteGraph k22 =
        BipartiteGraph::from_edge_list(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(k22.edge_count() == 4);
    CHECK(k22 == BipartiteGraph::complete(2, 2));

    const BipartiteGraph lonely = BipartiteGraph::from_edge_list(1, 1, {});
    CHECK(lonely.edge_count() == 0);
    CHECK(lonely.min_degree() == 0);

    std::vector<Edge> all;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) all.push_back({x, y});
    const BipartiteGraph k33 = BipartiteGraph::from_edge_list(3, 3, all);
    for (int x = 0; x < 3; ++x) CHECK(k33.degree_x(x) == 3);

    const BipartiteGraph duped = BipartiteGraph::from_edge_list(2, 2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(duped.edge_count() == 1);
}

TEST_CASE("from_edge_list rejects out-of-range indices naming the pair") {
    CHECK_THROWS_WITH_AS(BipartiteGraph::from_edge_list(2, 2, {{0, 0}, {2, 1}}),
                         doctest::Contains("(2, 1)"), std::invalid_argument);
    CHECK_THROWS_AS(BipartiteGraph::from_edge_list(1, 1, {{0, -1}}), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs") {
    CHECK(BipartiteGraph::complete(4, 4).edge_count() == 16);
    const BipartiteGraph star = BipartiteGraph::complete(1, 3);
    CHECK(star.edge_count() == 3);
    const BipartiteGraph k55 = BipartiteGraph::complete(5, 5);
    CHECK(k55.edge_count() == 25);
    CHECK(k55.min_degree() == 5);
    CHECK_THROWS_AS(BipartiteGraph::complete(0, 3), std::invalid_argument);
}

TEST_CASE("complement examples and involution") {
    CHECK(BipartiteGraph::complete(3, 3).complement().is_edgeless());
    CHECK(BipartiteGraph::from_edge_list(2, 2, {}).complement() ==
          BipartiteGraph::complete(2, 2));

    const BipartiteGraph pm =
        BipartiteGraph::from_edge_list(4, 4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const BipartiteGraph co = pm.complement();
    for (int x = 0; x < 4; ++x) CHECK(co.degree_x(x) == 3);
    for (int y = 0; y < 4; ++y) CHECK(co.degree_y(y) == 3);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const BipartiteGraph g = testing::random_graph(rng, 1 + trial % 6, 1 + (trial / 3) % 6, 0.4);
        CHECK(g.complement().complement() == g);
        CHECK(g.edge_count() + g.complement().edge_count() == g.n1() * g.n2());
        CHECK(g.transpose_consistent());
    }
}

TEST_CASE("min_degree") {
    CHECK(BipartiteGraph::complete(4, 4).min_degree() == 4);

    std::vector<Edge> edges;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (!(x == 0 && y == 0)) edges.push_back({x, y});
    CHECK(BipartiteGraph::from_edge_list(4, 4, edges).min_degree() == 3);

    CHECK(construction_one(3, 2).graph->min_degree() == 3);
    CHECK(BipartiteGraph::complete(2, 5).min_degree() == 2);
    CHECK_THROWS_AS(BipartiteGraph::from_edge_list(0, 0, {}).min_degree(), std::domain_error);
}

TEST_CASE("induced subgraphs with index mapping") {
    const BipartiteGraph k33 = BipartiteGraph::complete(3, 3);
    const InducedSubgraph k21 = induced_subgraph(k33, {0, 1}, {0});
    CHECK(k21.graph == BipartiteGraph::complete(2, 1));
    CHECK(k21.x_original == std::vector<int>{0, 1});

    const InducedSubgraph empty = induced_subgraph(k33, {}, {0, 1, 2});
    CHECK(empty.graph.n1() == 0);
    CHECK(empty.graph.edge_count() == 0);

    // the red graph of the four-block construction induced on the far blocks
    const WitnessReport c1 = construction_one(3, 2);
    const BipartiteGraph red = c1.coloring.mono_subgraph(Color::red);
    const InducedSubgraph far = induced_subgraph(red, {0, 1}, {2, 3});
    CHECK(far.graph == BipartiteGraph::complete(2, 2));
}

TEST_CASE("induced subgraph preserves adjacency on retained pairs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n1 = 1 + int(rng() % 6), n2 = 1 + int(rng() % 6);
        const BipartiteGraph g = testing::random_graph(rng, n1, n2, 0.5);
        std::vector<int> xs, ys;
        for (int x = 0; x < n1; ++x)
            if (rng() & 1) xs.push_back(x);
        for (int y = 0; y < n2; ++y)
            if (rng() & 1) ys.push_back(y);
        const InducedSubgraph sub = induced_subgraph(g, xs, ys);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j)
                CHECK(sub.graph.has_edge(int(i), int(j)) == g.has_edge(xs[i], ys[j]));
        CHECK(sub.graph.transpose_consistent());
    }
}
