#include <doctest.h>

#include "biparrow/coloring.hpp"
#include "biparrow/constructions.hpp"
#include "test_helpers.hpp"

using namespace biparrow;

namespace {

EdgeColoring all_one_color(const BipartiteGraph &g, Color c) {
    EdgeColoring coloring = EdgeColoring::over(g);
    for (const Edge &e : g.edges()) coloring.set(e.x, e.y, c);
    return coloring;
}

}  // namespace

TEST_CASE("target parsing and degeneracy") {
    CHECK(Target::parse("cm:3") == Target::connected_matching(3));
    CHECK(Target::parse("cycle:6") == Target::even_cycle(6));
    CHECK(Target::connected_matching(0).degenerate());
    CHECK(!Target::connected_matching(1).degenerate());
    CHECK_THROWS_AS(Target::even_cycle(5), std::invalid_argument);
    CHECK_THROWS_AS(Target::even_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(Target::even_cycle(0), std::invalid_argument);
    CHECK_THROWS_AS(Target::connected_matching(-1), std::invalid_argument);
    CHECK_THROWS_AS(Target::parse("cm:x"), std::invalid_argument);
    CHECK_THROWS_AS(Target::parse("path:3"), std::invalid_argument);
    CHECK(Target::parse("cycle:6").to_string() == "cycle:6");
}

TEST_CASE("coloring assignment rules") {
    const BipartiteGraph k22 = BipartiteGraph::complete(2, 2);
    EdgeColoring c = EdgeColoring::over(k22);
    CHECK(!c.is_total());
    c.set(0, 0, Color::red);
    CHECK(c.get(0, 0) == Color::red);
    CHECK_THROWS_AS(c.set(0, 0, Color::blue), std::invalid_argument);  // recolor needs unset
    c.unset(0, 0);
    c.set(0, 0, Color::blue);
    CHECK(c.get(0, 0) == Color::blue);
    CHECK(!c.get(1, 1).has_value());

    const BipartiteGraph path = BipartiteGraph::from_edge_list(2, 2, {{0, 0}});
    EdgeColoring p = EdgeColoring::over(path);
    CHECK_THROWS_AS(p.set(1, 1, Color::red), std::invalid_argument);  // not a base edge
}

TEST_CASE("mono subgraphs") {
    const BipartiteGraph k22 = BipartiteGraph::complete(2, 2);
    const EdgeColoring red = all_one_color(k22, Color::red);
    CHECK(red.mono_subgraph(Color::red) == k22);
    CHECK(red.mono_subgraph(Color::blue).is_edgeless());

    const WitnessReport split = split_witness(3, 2);
    const BipartiteGraph red_split = split.coloring.mono_subgraph(Color::red);
    CHECK(red_split.degree_x(0) == 3);
    CHECK(red_split.degree_x(1) == 3);
    CHECK(red_split.degree_x(2) == 0);  // K_{2,3} plus isolated X-vertex

    const EdgeColoring empty = EdgeColoring::over(k22);
    CHECK(empty.mono_subgraph(Color::red).is_edgeless());
}

TEST_CASE("mono subgraphs partition the base for total colorings") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
        const BipartiteGraph g =
            testing::random_graph(rng, 1 + int(rng() % 5), 1 + int(rng() % 5), 0.5);
        EdgeColoring c = EdgeColoring::over(g);
        for (const Edge &e : g.edges()) c.set(e.x, e.y, (rng() & 1) ? Color::red : Color::blue);
        CHECK(c.is_total());
        CHECK(c.count(Color::red) + c.count(Color::blue) == g.edge_count());
        const BipartiteGraph red = c.mono_subgraph(Color::red);
        const BipartiteGraph blue = c.mono_subgraph(Color::blue);
        for (const Edge &e : g.edges())
            CHECK(red.has_edge(e.x, e.y) != blue.has_edge(e.x, e.y));
    }
}

TEST_CASE("contains_target on the worked examples") {
    const EdgeColoring red44 = all_one_color(BipartiteGraph::complete(4, 4), Color::red);
    CHECK(contains_target(red44, Color::red, Target::connected_matching(4)).found);

    const WitnessReport split = split_witness(3, 2);
    CHECK(!contains_target(split.coloring, Color::red, Target::connected_matching(3)).found);
    CHECK(!contains_target(split.coloring, Color::blue, Target::connected_matching(2)).found);

    const TargetCheck degenerate =
        contains_target(split.coloring, Color::red, Target::connected_matching(0));
    CHECK(degenerate.found);
    CHECK(degenerate.degenerate);

    // witnesses come back checked
    const TargetCheck cm = contains_target(red44, Color::red, Target::connected_matching(3));
    CHECK(cm.witness.matching.size() == 3);
    const TargetCheck cyc = contains_target(red44, Color::red, Target::even_cycle(8));
    REQUIRE(cyc.found);
    CHECK(verify_cycle(red44.mono_subgraph(Color::red), cyc.witness.cycle, 8));
}

TEST_CASE("contains_target is monotone under same-color insertion") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        const BipartiteGraph g =
            testing::random_graph(rng, 2 + int(rng() % 4), 2 + int(rng() % 4), 0.6);
        EdgeColoring c = EdgeColoring::over(g);
        std::vector<Edge> unassigned;
        for (const Edge &e : g.edges()) {
            const int roll = int(rng() % 3);
            if (roll == 0)
                c.set(e.x, e.y, Color::red);
            else if (roll == 1)
                c.set(e.x, e.y, Color::blue);
            else
                unassigned.push_back(e);
        }
        const Target targets[] = {Target::connected_matching(2), Target::even_cycle(4)};
        for (const Target &t : targets) {
            const bool before = contains_target(c, Color::red, t).found;
            if (unassigned.empty()) continue;
            EdgeColoring extended = c;
            const Edge added = unassigned[rng() % unassigned.size()];
            extended.set(added.x, added.y, Color::red);
            if (before) CHECK(contains_target(extended, Color::red, t).found);
        }
    }
}

TEST_CASE("mono component profiles") {
    const EdgeColoring red33 = all_one_color(BipartiteGraph::complete(3, 3), Color::red);
    const MonoProfiles p = mono_component_profile(red33);
    CHECK(p.red.max_min_side == 3);
    CHECK(p.blue.max_min_side == 0);

    const WitnessReport c1 = construction_one(3, 2);
    const MonoProfiles q = mono_component_profile(c1.coloring);
    CHECK(q.blue.max_min_side == 1);  // four disjoint blue K_{1,1}
    CHECK(q.red.max_min_side == 2);   // two red K_{2,2} blocks
}

TEST_CASE("check_lemma_conclusions") {
    const EdgeColoring red44 = all_one_color(BipartiteGraph::complete(4, 4), Color::red);
    const LemmaReport r1 = check_lemma_conclusions(red44, 3, 2);
    CHECK(r1.disjunction_holds);
    CHECK(r1.red_component_m);

    // threshold-tight construction: delta = 3 = (3/4)(m+n-1) fails the strict
    // hypothesis, and indeed the disjunction fails
    const LemmaReport r2 = check_lemma_conclusions(construction_one(3, 2).coloring, 3, 2);
    CHECK(!r2.disjunction_holds);
    CHECK(!r2.red_has_cm_m);
    CHECK(r2.blue_meets_n.has_value());
    CHECK(!*r2.blue_meets_n);

    // split witness on K_{3,3}: no red CM_3 and no blue component meeting
    // both sides in >= 2 (host order is below 2(m+n-1))
    const LemmaReport r3 = check_lemma_conclusions(split_witness(3, 2).coloring, 3, 2);
    CHECK(!r3.red_has_cm_m);
    REQUIRE(r3.blue_meets_n.has_value());
    CHECK(!*r3.blue_meets_n);

    // the cover-escape probe fires when a qualifying blue component exists
    const EdgeColoring blue44 = all_one_color(BipartiteGraph::complete(4, 4), Color::blue);
    const LemmaReport r4 = check_lemma_conclusions(blue44, 3, 2);
    REQUIRE(r4.blue_meets_n.has_value());
    CHECK(*r4.blue_meets_n);
    REQUIRE(r4.cover_escape.has_value());
    CHECK(r4.cover_escape->cover_size == 4);

    CHECK_THROWS_AS(check_lemma_conclusions(EdgeColoring::over(BipartiteGraph::complete(2, 2)), 2, 1),
                    std::invalid_argument);  // partial
    CHECK_THROWS_AS(check_lemma_conclusions(
                        all_one_color(BipartiteGraph::complete(2, 3), Color::red), 2, 1),
                    std::invalid_argument);  // unbalanced
}
