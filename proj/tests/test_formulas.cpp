#include <doctest.h>

#include "fanreg/betti.hpp"
#include "fanreg/formulas.hpp"
#include "fanreg/graph_invariants.hpp"
#include "support/test_support.hpp"

using namespace fanreg;

namespace {

FanGraphSpec p4_spec() {
    FanGraphSpec spec;
    spec.base_size = 2;
    spec.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {2}}};
    return spec;
}

FanGraphSpec two_triangles_spec() {  // K_3 branch on one vertex of K_3
    FanGraphSpec spec;
    spec.base_size = 3;
    spec.blocks = {FanBlock{{1}, {3}}};
    return spec;
}

FanGraphSpec double_triangle_spec() {  // K_3 branches on both vertices of K_2
    FanGraphSpec spec;
    spec.base_size = 2;
    spec.blocks = {FanBlock{{1}, {3}}, FanBlock{{2}, {3}}};
    return spec;
}

InvariantReport oracle_of(const FanGraphSpec& spec) {
    return oracle_invariants(edge_ideal(realize(spec).graph), Field::gf2);
}

}  // namespace

TEST_CASE("complete and path invariants") {
    CHECK(complete_invariants(2) == std::pair<int, int>{1, 1});
    CHECK(complete_invariants(5) == std::pair<int, int>{1, 1});
    CHECK(complete_invariants(8) == std::pair<int, int>{1, 1});
    CHECK_THROWS_AS(complete_invariants(1), validation_error);

    CHECK(path_invariants(4) == std::pair<int, int>{2, 1});
    CHECK(path_invariants(5) == std::pair<int, int>{2, 2});
    CHECK(path_invariants(7) == std::pair<int, int>{3, 2});
    CHECK_THROWS_AS(path_invariants(1), validation_error);
}

TEST_CASE("fan dimension") {
    CHECK(fan_dimension(double_triangle_spec()) == 2);  // W = [n]
    CHECK(fan_dimension(two_triangles_spec()) == 2);    // W proper, |W| + 1

    FanGraphSpec k4;
    k4.base_size = 4;
    CHECK(fan_dimension(k4) == 1);
}

TEST_CASE("fan depth") {
    // every 1-fan has depth 1
    CHECK(fan_depth(two_triangles_spec()) == 1);
    FanGraphSpec one_fan;
    one_fan.base_size = 4;
    one_fan.blocks = {FanBlock{{2, 3}, {3, 3}}};
    CHECK(fan_depth(one_fan) == 1);

    CHECK(fan_depth(p4_spec()) == 2);

    // oracle-checked value on the 6-vertex realization
    CHECK(*oracle_of(double_triangle_spec()).depth == 2);
    CHECK(fan_depth(double_triangle_spec()) == 2);
}

TEST_CASE("fan regularity") {
    // p = 2, attach set fills the base, terminal excess 2 on both blocks
    CHECK(induced_matching_number(realize(double_triangle_spec()).graph) == 2);
    CHECK(fan_regularity(double_triangle_spec()) == 2);

    // p = 1 but |W| < n - 1 so the +1 case applies
    CHECK(induced_matching_number(realize(two_triangles_spec()).graph) == 2);
    CHECK(fan_regularity(two_triangles_spec()) == 2);

    // pure branches: p = 0, terminal excess 1, reg = 1 (consistent with P_4)
    CHECK(fan_regularity(p4_spec()) == 1);
}

TEST_CASE("circ depth formula") {
    CompositeSide left{p4_spec(), 3};
    CompositeSide right{p4_spec(), 3};
    auto r = circ_depth_formula(left, right);
    CHECK(*r.t_depth == 2);
    CHECK(*r.s_depth == 2);
    CHECK(*r.depth == 2);  // P_5
    CHECK(*r.depth == path_invariants(5).first);

    // unique-maximum blocks on both sides: t = 0, s = 1
    FanGraphSpec unique_max;
    unique_max.base_size = 2;
    unique_max.blocks = {FanBlock{{1, 2}, {2, 3}}};
    CompositeSide u{unique_max, leaf_catalog(unique_max)[0].leaf};
    auto r0 = circ_depth_formula(u, u);
    CHECK(*r0.t_depth == 0);
    CHECK(*r0.s_depth == 1);
    CHECK(*r0.depth == fan_depth(unique_max) * 2 - 1);

    // mixed sides: t = 1, s = 1
    auto r1 = circ_depth_formula(left, u);
    CHECK(*r1.t_depth == 1);
    CHECK(*r1.s_depth == 1);
}

TEST_CASE("circ regularity formula") {
    CompositeSide left{p4_spec(), 3};
    CompositeSide right{p4_spec(), 3};
    auto r = circ_regularity_formula(left, right);
    CHECK(*r.t_reg == 0);
    CHECK(*r.reg == 2);  // P_5
    CHECK(*r.reg == path_invariants(5).second);

    // t = 2 with full attach sets: drop by two.  Deleting the leaf's
    // neighbor loses one matched triangle on each side.
    FanGraphSpec full;
    full.base_size = 2;
    full.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {3}}};
    REQUIRE(fan_regularity(full) == 2);
    Vertex leaf = leaf_catalog(full)[0].leaf;
    SimpleGraph deleted = remove_vertex(realize(full).graph, 1);
    REQUIRE(induced_matching_number(deleted) == 1);  // t contribution on each side
    CompositeSide f{full, leaf};
    auto r2 = circ_regularity_formula(f, f);
    CHECK(*r2.t_reg == 2);
    CHECK(*r2.reg == 2 + 2 - 2);
    // and the oracle agrees on the realized composite
    CompositeSpec spec;
    spec.op = GlueOp::circ;
    spec.left = f;
    spec.right = f;
    auto oracle = oracle_invariants(edge_ideal(realize(spec).graph), Field::gf2);
    CHECK(*oracle.reg == *r2.reg);
}

TEST_CASE("star formulas on paths") {
    CompositeSide side{p4_spec(), 3};
    auto d = star_depth_formula(side, side);
    CHECK(*d.t_depth == 2);
    CHECK(*d.s_depth == 1);
    CHECK(*d.depth == 3);  // P_7
    CHECK(*d.depth == path_invariants(7).first);

    auto r = star_regularity_formula(side, side);
    CHECK(*r.t_reg == 0);
    CHECK(*r.reg == 2);  // P_7
    CHECK(*r.reg == path_invariants(7).second);

    // t = 0 keeps the sum for depth
    FanGraphSpec unique_max;
    unique_max.base_size = 2;
    unique_max.blocks = {FanBlock{{1, 2}, {2, 3}}};
    CompositeSide u{unique_max, leaf_catalog(unique_max)[0].leaf};
    auto d0 = star_depth_formula(u, u);
    CHECK(*d0.t_depth == 0);
    CHECK(*d0.s_depth == 0);
    CHECK(*d0.depth == 2 * fan_depth(unique_max));

    auto d1 = star_depth_formula(side, u);
    CHECK(*d1.t_depth == 1);
    CHECK(*d1.s_depth == 1);
}

TEST_CASE("star regularity t = 2 cases") {
    // |W_i| = n_i on some side drops the sum by one
    FanGraphSpec full;
    full.base_size = 2;
    full.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {3}}};
    CompositeSide f{full, leaf_catalog(full)[0].leaf};
    auto r = star_regularity_formula(f, f);
    CHECK(*r.t_reg == 2);
    CHECK(*r.reg == 2 + 2 - 1);
    CompositeSpec spec;
    spec.op = GlueOp::star;
    spec.left = f;
    spec.right = f;
    auto oracle = oracle_invariants(edge_ideal(realize(spec).graph), Field::gf2);
    CHECK(*oracle.reg == *r.reg);

    // |W_i| = n_i - 1 on both sides keeps the sum
    FanGraphSpec almost;
    almost.base_size = 2;
    almost.blocks = {FanBlock{{1}, {2}}};
    REQUIRE(fan_regularity(almost) == 1);  // P_3
    Vertex leaf = leaf_catalog(almost)[0].leaf;
    SimpleGraph deleted = remove_vertex(realize(almost).graph, 1);
    REQUIRE(induced_matching_number(deleted) == 0);
    CompositeSide a{almost, leaf};
    auto r2 = star_regularity_formula(a, a);
    CHECK(*r2.t_reg == 2);
    CHECK(*r2.reg == 1 + 1);
    CompositeSpec spec2;
    spec2.op = GlueOp::star;
    spec2.left = a;
    spec2.right = a;
    auto oracle2 = oracle_invariants(edge_ideal(realize(spec2).graph), Field::gf2);
    CHECK(*oracle2.reg == *r2.reg);
}

TEST_CASE("composite formulas reject degenerate sides") {
    FanGraphSpec k2;
    k2.base_size = 2;
    CompositeSide degenerate{k2, 2};
    CompositeSide ok{p4_spec(), 3};
    CHECK_THROWS_AS(circ_depth_formula(degenerate, ok), hypothesis_error);
    CHECK_THROWS_AS(star_regularity_formula(ok, degenerate), hypothesis_error);
    CompositeSide bad_leaf{p4_spec(), 1};
    CHECK_THROWS_AS(circ_depth_formula(bad_leaf, ok), validation_error);
}

TEST_CASE("leaf removal depth identity") {
    // unique-maximum block at the leaf: identity predicted
    FanGraphSpec spec;
    spec.base_size = 3;
    spec.blocks = {FanBlock{{1, 2}, {2, 3}}};
    Vertex leaf = leaf_catalog(spec)[0].leaf;
    int predicted = leaf_removal_depth_identity(spec, leaf);
    CHECK(predicted == fan_depth(spec));
    // oracle confirms on both graphs
    SimpleGraph g = realize(spec).graph;
    auto with_leaf = oracle_invariants(edge_ideal(g), Field::gf2);
    auto without = oracle_invariants(edge_ideal(remove_vertex(g, leaf)), Field::gf2);
    CHECK(*with_leaf.depth == predicted);
    CHECK(*without.depth == predicted);

    // P_4 fan: T' = 1 = T, hypothesis fails, prediction withheld
    CHECK_THROWS_AS(leaf_removal_depth_identity(p4_spec(), 3), hypothesis_error);
}

TEST_CASE("clique sum regularity drop") {
    // |W| = n - 2 with terminal excess 2 everywhere: s = 1
    FanGraphSpec spec;
    spec.base_size = 3;
    spec.blocks = {FanBlock{{1}, {3}}};
    CHECK(clique_sum_reg_drop(spec, 2) == 1);

    // a terminal excess of 1 kills the drop
    FanGraphSpec pure;
    pure.base_size = 3;
    pure.blocks = {FanBlock{{1}, {2}}};
    CHECK(clique_sum_reg_drop(pure, 2) == 0);

    // |W| <= n - 3 kills the drop too
    FanGraphSpec sparse;
    sparse.base_size = 4;
    sparse.blocks = {FanBlock{{1}, {3}}};
    CHECK(clique_sum_reg_drop(sparse, 2) == 0);

    CHECK_THROWS_AS(clique_sum_reg_drop(spec, 1), validation_error);  // v in W

    // oracle check of the predicted drop: glue a pendant edge at v and
    // compare regularities with and without v
    for (const FanGraphSpec& s : {spec, pure, sparse}) {
        Vertex v = 2;
        int drop = clique_sum_reg_drop(s, v);
        SimpleGraph g = realize(s).graph;
        Vertex pendant = g.max_label() + 1;
        std::vector<Vertex> vs = g.vertices();
        vs.push_back(pendant);
        std::vector<Edge> es = g.edges();
        es.push_back({v, pendant});
        SimpleGraph glued(vs, es);
        int reg_g = induced_matching_number(glued);  // chordal
        int reg_without = induced_matching_number(remove_vertex(glued, v));
        CHECK(reg_without == reg_g - drop);
        CHECK(*oracle_invariants(edge_ideal(glued), Field::gf2).reg == reg_g);
    }
}

TEST_CASE("ideal regularity from quotient regularity") {
    CHECK(ideal_reg_from_quotient(1) == 2);
    CHECK(ideal_reg_from_quotient(0) == 1);
    CHECK(ideal_reg_from_quotient(3) == 4);
    CHECK_THROWS_AS(ideal_reg_from_quotient(-1), validation_error);
}
