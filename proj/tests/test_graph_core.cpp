#include "doctest.h"

#include <set>

#include "ocl/colorers.hpp"
#include "ocl/generators.hpp"
#include "ocl/graph.hpp"
#include "ocl/rng.hpp"

using namespace ocl;

TEST_SUITE_BEGIN("graph_core");

TEST_CASE("build_graph basics") {
    Graph single = build_graph(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.degree(0) == 0);

    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    for (int v = 0; v < 4; ++v)
        CHECK(c4.degree(v) == 2);

    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 0}}), doctest::Contains("self-loop"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(build_graph(3, {{0, 5}}), doctest::Contains("(0,5)"), ValidationError);
}

TEST_CASE("build_graph collapses duplicates and is idempotent on its output") {
    Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
    CHECK(g.edge_count() == 2);
    Graph again = build_graph(g.vertex_count(), g.edges());
    CHECK(again == g);
}

TEST_CASE("color token round trip") {
    Color c{"c1", 3};
    CHECK(to_string(c) == "c1#3");
    CHECK(parse_color("c1#3") == c);
    CHECK(parse_color("A1/ff#0") == Color{"A1/ff", 0});
    CHECK_THROWS_AS(parse_color("nohash"), ValidationError);
    CHECK_THROWS_AS(parse_color("#1"), ValidationError);
    CHECK_THROWS_AS(parse_color("p#"), ValidationError);
}

TEST_CASE("is_proper on K2 and C5") {
    Graph k2 = build_graph(2, {{0, 1}});
    Coloring same{Color{"p", 0}, Color{"p", 0}};
    CHECK_FALSE(is_proper(k2, same));
    Coloring distinct{Color{"p", 0}, Color{"p", 1}};
    CHECK(is_proper(k2, distinct));

    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    Coloring alternating;
    for (int v = 0; v < 5; ++v)
        alternating.push_back(Color{"p", v % 2});
    CHECK_FALSE(is_proper(c5, alternating));

    Coloring partial{Color{"p", 0}, std::nullopt};
    CHECK_THROWS_WITH_AS(is_proper(k2, partial), doctest::Contains("vertex 1"), ValidationError);
}

TEST_CASE("is_proper stays true when recoloring to a globally fresh color") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        OnlineInstance inst = gen_random(8, 0.4, 100 + trial);
        RunResult result = run(first_fit(), inst);
        Coloring coloring = result.coloring;
        REQUIRE(is_proper(inst.graph, coloring));
        int v = rng.next_below(8);
        coloring[v] = Color{"fresh", trial};
        CHECK(is_proper(inst.graph, coloring));
    }
}

TEST_CASE("make_instance validates permutation and prediction domain") {
    Graph g = build_graph(3, {{0, 1}});
    CHECK_THROWS_WITH_AS(make_instance(g, {0, 1}), doctest::Contains("entries"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(make_instance(g, {0, 1, 1}), doctest::Contains("permutation"),
                         ValidationError);
    std::map<int, ColorLabel> partial_preds{{0, "a"}, {1, "b"}};
    CHECK_THROWS_AS(make_instance(g, {0, 1, 2}, partial_preds), ValidationError);
    std::map<int, ColorLabel> bad_vertex{{0, "a"}, {1, "b"}, {5, "c"}};
    CHECK_THROWS_AS(make_instance(g, {0, 1, 2}, bad_vertex), ValidationError);
}

TEST_CASE("suffix at 1 is the whole instance, suffix at n a single vertex") {
    OnlineInstance inst = gen_random(7, 0.5, 42);
    SuffixInstance whole = suffix_instance(inst, 1);
    CHECK(whole.instance.graph.vertex_count() == 7);
    CHECK(whole.instance.graph.edge_count() == inst.graph.edge_count());

    SuffixInstance last = suffix_instance(inst, 7);
    CHECK(last.instance.graph.vertex_count() == 1);
    CHECK(last.instance.graph.edge_count() == 0);
    CHECK(last.original_ids[0] == inst.order.back());

    CHECK_THROWS_AS(suffix_instance(inst, 0), ValidationError);
    CHECK_THROWS_AS(suffix_instance(inst, 8), ValidationError);
}

TEST_CASE("suffix keeps exactly the edges among late-revealed vertices") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        OnlineInstance inst = gen_random(9, 0.5, 900 + seed);
        const int n = 9;
        for (int i = 1; i <= n; ++i) {
            SuffixInstance suffix = suffix_instance(inst, i);
            CHECK(suffix.instance.graph.vertex_count() == n - i + 1);
            std::set<std::pair<int, int>> expected;
            for (const auto& [u, v] : inst.graph.edges())
                if (inst.position[u] >= i - 1 && inst.position[v] >= i - 1) {
                    int a = inst.position[u] - (i - 1);
                    int b = inst.position[v] - (i - 1);
                    expected.emplace(std::min(a, b), std::max(a, b));
                }
            std::set<std::pair<int, int>> actual(suffix.instance.graph.edges().begin(),
                                                 suffix.instance.graph.edges().end());
            CHECK(actual == expected);
            for (int t = 0; t < n - i + 1; ++t)
                CHECK(suffix.original_ids[t] == inst.order[i - 1 + t]);
        }
    }
}

TEST_CASE("suffix restricts predictions to the surviving vertices") {
    OnlineInstance base = gen_random(6, 0.3, 7);
    std::map<int, ColorLabel> preds;
    for (int v = 0; v < 6; ++v)
        preds[v] = "L" + std::to_string(v);
    OnlineInstance inst = make_instance(base.graph, base.order, preds);
    SuffixInstance suffix = suffix_instance(inst, 3);
    REQUIRE(suffix.instance.predictions.has_value());
    for (int t = 0; t < 4; ++t)
        CHECK(suffix.instance.predictions->at(t) == "L" + std::to_string(suffix.original_ids[t]));
}

TEST_SUITE_END();
