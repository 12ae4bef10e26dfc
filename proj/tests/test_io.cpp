#include <doctest.h>

#include <sstream>

#include "biparrow/io.hpp"
#include "test_helpers.hpp"

using namespace biparrow;

TEST_CASE("graph files round-trip") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        const BipartiteGraph g =
            testing::random_graph(rng, 1 + int(rng() % 8), 1 + int(rng() % 8), 0.4);
        std::stringstream buffer;
        write_graph(buffer, g);
        CHECK(read_graph(buffer) == g);
    }
}

TEST_CASE("graph reader semantics") {
    std::istringstream ok(
        "# a comment\n"
        "p bgraph 2 2\n"
        "e 0 0\n"
        "e 0 0\n"   // duplicates are de-duplicated
        "e 1 1\n");
    const BipartiteGraph g = read_graph(ok);
    CHECK(g.edge_count() == 2);

    std::istringstream out_of_range("p bgraph 2 2\ne 0 5\n");
    CHECK_THROWS_AS(read_graph(out_of_range), ParseError);

    std::istringstream no_header("e 0 0\n");
    CHECK_THROWS_AS(read_graph(no_header), ParseError);

    std::istringstream bad_tag("p bgraph 1 1\nq 0 0\n");
    CHECK_THROWS_AS(read_graph(bad_tag), ParseError);

    std::istringstream wrong_kind("p bcol 1 1\n");
    CHECK_THROWS_AS(read_graph(wrong_kind), ParseError);
}

TEST_CASE("coloring files round-trip") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 60; ++trial) {
        const BipartiteGraph g =
            testing::random_graph(rng, 1 + int(rng() % 6), 1 + int(rng() % 6), 0.5);
        EdgeColoring c = EdgeColoring::over(g);
        for (const Edge &e : g.edges()) c.set(e.x, e.y, (rng() & 1) ? Color::red : Color::blue);
        std::stringstream buffer;
        write_coloring(buffer, c);
        const EdgeColoring back = read_coloring(buffer);
        CHECK(back.base() == g);
        for (const Edge &e : g.edges()) CHECK(back.get(e.x, e.y) == c.get(e.x, e.y));
    }
}

TEST_CASE("coloring reader rejects duplicates and contradictions") {
    std::istringstream dup("p bcol 2 2\ne 0 0 r\ne 0 0 r\n");
    CHECK_THROWS_AS(read_coloring(dup), ParseError);

    std::istringstream contradiction("p bcol 2 2\ne 0 0 r\ne 0 0 b\n");
    CHECK_THROWS_AS(read_coloring(contradiction), ParseError);

    std::istringstream bad_color("p bcol 2 2\ne 0 0 g\n");
    CHECK_THROWS_AS(read_coloring(bad_color), ParseError);
}

TEST_CASE("coloring read against a known base") {
    auto base = std::make_shared<const BipartiteGraph>(BipartiteGraph::complete(2, 2));
    std::istringstream partial("p bcol 2 2\ne 0 0 r\ne 1 1 b\n");
    const EdgeColoring c = read_coloring(partial, base);
    CHECK(!c.is_total());
    CHECK(c.get(0, 0) == Color::red);
    CHECK(!c.get(0, 1).has_value());

    auto small = std::make_shared<const BipartiteGraph>(
        BipartiteGraph::from_edge_list(2, 2, {{0, 0}}));
    std::istringstream not_base("p bcol 2 2\ne 1 1 r\n");
    CHECK_THROWS_AS(read_coloring(not_base, small), ParseError);

    std::istringstream mismatch("p bcol 3 2\ne 0 0 r\n");
    CHECK_THROWS_AS(read_coloring(mismatch, base), ParseError);
}
