#include <doctest.h>

#include <algorithm>

#include "fanreg/fan.hpp"
#include "fanreg/graph.hpp"
#include "fanreg/graph_invariants.hpp"
#include "fanreg/util.hpp"
#include "support/test_support.hpp"

using namespace fanreg;

TEST_CASE("graph construction normalizes and validates") {
    SimpleGraph g({3, 1, 2, 2}, {{2, 1}, {1, 2}, {2, 3}});
    CHECK(g.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK_THROWS_AS(SimpleGraph({1, 2}, {{1, 1}}), validation_error);
    CHECK_THROWS_AS(SimpleGraph({1, 2}, {{1, 3}}), validation_error);
}

TEST_CASE("neighborhood") {
    SimpleGraph k3 = SimpleGraph::complete(3);
    CHECK(neighborhood(k3, 1) == std::vector<Vertex>{2, 3});

    SimpleGraph p4 = SimpleGraph::path(4);
    CHECK(neighborhood(p4, 2) == std::vector<Vertex>{1, 3});
    CHECK(closed_neighborhood(p4, 2) == std::vector<Vertex>{1, 2, 3});

    SimpleGraph lonely({1, 2, 9}, {{1, 2}});
    CHECK(neighborhood(lonely, 9).empty());

    CHECK_THROWS_WITH_AS(neighborhood(p4, 7), "unknown vertex 7", validation_error);
}

TEST_CASE("induced subgraph and vertex removal") {
    SimpleGraph p4 = SimpleGraph::path(4);

    SimpleGraph e = induced_subgraph(p4, {1, 2});
    CHECK(e.edges() == std::vector<Edge>{{1, 2}});

    SimpleGraph iso = induced_subgraph(p4, {1, 3});
    CHECK(iso.vertex_count() == 2);
    CHECK(iso.edge_count() == 0);

    SimpleGraph k4 = SimpleGraph::complete(4);
    CHECK(induced_subgraph(k4, {2, 3, 4}) ==
          induced_subgraph(SimpleGraph::complete(4), {2, 3, 4}));
    CHECK(induced_subgraph(k4, {1, 2, 3}).edge_count() == 3);

    CHECK(remove_vertices(p4, {4}) == SimpleGraph::path(3));
    CHECK(remove_vertices(SimpleGraph::complete(5), {5}) == SimpleGraph::complete(4));
    SimpleGraph split = remove_vertices(p4, {2});
    CHECK(split.vertices() == std::vector<Vertex>{1, 3, 4});
    CHECK(split.edges() == std::vector<Edge>{{3, 4}});

    CHECK_THROWS_AS(induced_subgraph(p4, {1, 9}), validation_error);
    CHECK_THROWS_AS(remove_vertices(p4, {9}), validation_error);
}

TEST_CASE("leaves") {
    CHECK(leaves(SimpleGraph::path(4)) == std::vector<Vertex>{1, 4});
    CHECK(leaves(SimpleGraph::complete(3)).empty());
    SimpleGraph star({1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(leaves(star) == std::vector<Vertex>{2, 3, 4});
}

TEST_CASE("disjoint union relabels deterministically") {
    auto two_edges = disjoint_union(SimpleGraph::complete(2), SimpleGraph::complete(2));
    CHECK(two_edges.graph.vertex_count() == 4);
    CHECK(two_edges.graph.edges() == std::vector<Edge>{{1, 2}, {4, 5}});
    CHECK(two_edges.shift == 3);

    SimpleGraph lone({1}, {});
    auto mixed = disjoint_union(SimpleGraph::path(3), lone);
    CHECK(mixed.graph.vertex_count() == 4);
    CHECK(mixed.graph.edge_count() == 2);

    auto from_empty = disjoint_union(SimpleGraph(), SimpleGraph::path(3));
    CHECK(from_empty.shift == 0);
    CHECK(from_empty.graph == SimpleGraph::path(3));
}

TEST_CASE("chordality") {
    SimpleGraph c4({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK_FALSE(is_chordal(c4));
    CHECK(is_chordal(SimpleGraph::complete(6)));
    CHECK(is_chordal(SimpleGraph::path(7)));

    SimpleGraph c5({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK_FALSE(is_chordal(c5));
    // chorded C4 is chordal again
    SimpleGraph chorded({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    CHECK(is_chordal(chorded));

    // every realized fan graph is chordal
    FanGraphSpec spec;
    spec.base_size = 3;
    spec.blocks = {FanBlock{{1, 2}, {2, 4}}, FanBlock{{3}, {3}}};
    CHECK(is_chordal(realize(spec).graph));
}

TEST_CASE("induced matching number agrees with brute force") {
    CHECK(induced_matching_number(SimpleGraph::complete(2)) == 1);
    CHECK(induced_matching_number(SimpleGraph::complete(6)) == 1);
    CHECK(induced_matching_number(SimpleGraph::path(5)) == 2);
    CHECK(testsupport::brute_induced_matching_number(SimpleGraph::path(5)) == 2);

    auto triangles = disjoint_union(SimpleGraph::complete(3), SimpleGraph::complete(3));
    CHECK(induced_matching_number(triangles.graph) == 2);
    CHECK(testsupport::brute_induced_matching_number(triangles.graph) == 2);

    SplitMix64 rng(2024);
    for (int round = 0; round < 30; ++round) {
        SimpleGraph g = testsupport::random_graph(rng, 3 + int(rng.below(5)), 45);
        CHECK(induced_matching_number(g) == testsupport::brute_induced_matching_number(g));
    }
}

TEST_CASE("vertex cover and independent set agree with brute force") {
    CHECK(min_vertex_cover_size(SimpleGraph::complete(5)) == 4);
    CHECK(min_vertex_cover_size(SimpleGraph::path(4)) == 2);
    CHECK(min_vertex_cover_size(SimpleGraph({1, 2, 3}, {})) == 0);

    SplitMix64 rng(77);
    for (int round = 0; round < 30; ++round) {
        SimpleGraph g = testsupport::random_graph(rng, 3 + int(rng.below(6)), 40);
        CHECK(min_vertex_cover_size(g) == testsupport::brute_min_vertex_cover(g));
        CHECK(max_independent_set_size(g) == testsupport::brute_max_independent_set(g));
    }
}

TEST_CASE("matching and cover validation") {
    SimpleGraph p5 = SimpleGraph::path(5);
    Matching m{{{1, 2}, {4, 5}}};
    m.validate(p5);
    CHECK(m.induced_in(p5));

    SimpleGraph p4 = SimpleGraph::path(4);
    Matching adjacent{{{1, 2}, {3, 4}}};
    adjacent.validate(p4);
    CHECK_FALSE(adjacent.induced_in(p4));  // the edge {2,3} joins them

    Matching overlapping{{{1, 2}, {2, 3}}};
    CHECK_THROWS_AS(overlapping.validate(p5), validation_error);

    VertexCover minimal{{2, 4}, true};
    minimal.validate(p5);
    VertexCover not_minimal{{1, 2, 3, 5}, true};
    CHECK_THROWS_AS(not_minimal.validate(p5), validation_error);
    VertexCover not_cover{{1, 5}, false};
    CHECK_THROWS_AS(not_cover.validate(p5), validation_error);
}

TEST_CASE("invariant properties on random graphs") {
    SplitMix64 rng(555);
    for (int round = 0; round < 25; ++round) {
        int n1 = 2 + int(rng.below(5));
        int n2 = 2 + int(rng.below(5));
        SimpleGraph g1 = testsupport::random_graph(rng, n1, 50);
        SimpleGraph g2 = testsupport::random_graph(rng, n2, 50);

        // additivity over disjoint unions
        auto both = disjoint_union(g1, g2);
        CHECK(induced_matching_number(both.graph) ==
              induced_matching_number(g1) + induced_matching_number(g2));

        // monotonicity under induced subgraphs
        std::vector<Vertex> sub;
        for (Vertex v : g1.vertices())
            if (rng.below(2) == 0) sub.push_back(v);
        CHECK(induced_matching_number(induced_subgraph(g1, sub)) <=
              induced_matching_number(g1));

        // cover/independent-set complementarity
        CHECK(min_vertex_cover_size(g1) + max_independent_set_size(g1) ==
              g1.vertex_count());
    }
}

TEST_CASE("chordality is hereditary on samples") {
    FanGraphSpec spec;
    spec.base_size = 4;
    spec.blocks = {FanBlock{{1}, {3}}, FanBlock{{2, 3}, {2, 4}}};
    SimpleGraph g = realize(spec).graph;
    REQUIRE(is_chordal(g));
    SplitMix64 rng(9000);
    for (int round = 0; round < 20; ++round) {
        std::vector<Vertex> sub;
        for (Vertex v : g.vertices())
            if (rng.below(2) == 0) sub.push_back(v);
        CHECK(is_chordal(induced_subgraph(g, sub)));
    }
}
