#include <doctest.h>

#include "fanreg/io.hpp"
#include "support/test_support.hpp"

using namespace fanreg;

TEST_CASE("graph round trip and strict parsing") {
    SimpleGraph g({1, 2, 3, 5}, {{1, 2}, {2, 3}, {3, 5}});
    CHECK(graph_from_json(graph_to_json(g)) == g);

    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[1,2],"edges":[[1,1]]})")),
                    validation_error);
    CHECK_THROWS_AS(graph_from_json(
                        json::parse(R"({"vertices":[1,2],"edges":[[1,2],[1,2]]})")),
                    validation_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[1,2],"edges":[[2,1]]})")),
                    validation_error);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"vertices":[1,2]})")),
                    validation_error);
}

TEST_CASE("fan spec round trip and validation messages") {
    FanGraphSpec spec;
    spec.base_size = 3;
    spec.blocks = {FanBlock{{1, 2}, {2, 4}}, FanBlock{{3}, {2}}};
    json j = fan_spec_to_json(spec);
    CHECK(fan_spec_from_json(j) == spec);

    json bad = json::parse(R"({"n": 2, "blocks": [{"vertices": [1], "branch_sizes": [1]}]})");
    CHECK_THROWS_WITH_AS(fan_spec_from_json(bad),
                         "block 1, position 1: branch size 1 must exceed the position",
                         validation_error);
}

TEST_CASE("composite spec round trip") {
    FanGraphSpec fan;
    fan.base_size = 2;
    fan.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {2}}};
    CompositeSpec c;
    c.op = GlueOp::star;
    c.left = {fan, 3};
    c.right = {fan, 4};
    json j = composite_spec_to_json(c);
    CompositeSpec back = composite_spec_from_json(j);
    CHECK(back.op == GlueOp::star);
    CHECK(back.left.spec == fan);
    CHECK(back.left.leaf == 3);
    CHECK(back.right.leaf == 4);

    json bad = j;
    bad["op"] = "join";
    CHECK_THROWS_AS(composite_spec_from_json(bad), validation_error);
}

TEST_CASE("betti table serialization is sorted and exact") {
    BettiTable t;
    t.variable_count = 4;
    t.entries[{1, 2}] = 3;
    t.entries[{0, 0}] = 1;
    t.entries[{2, 3}] = 2;
    json j = betti_table_to_json(t);
    CHECK(j["n"] == 4);
    CHECK(j["entries"][0]["i"] == 0);
    CHECK(j["entries"][1]["i"] == 1);
    CHECK(j["entries"][1]["beta"] == 3);
    CHECK(j["entries"][2]["j"] == 3);
    CHECK(j["pd"] == 2);
    CHECK(j["depth"] == 2);
    CHECK(j["reg"] == 1);
}

TEST_CASE("invariant report serialization") {
    InvariantReport r;
    r.method = Method::formula;
    r.dim = 2;
    r.depth = 2;
    r.reg = 1;
    r.p = 0;
    r.attach_size = 2;
    json j = invariant_report_to_json(r);
    CHECK(j["method"] == "formula");
    CHECK(j["dim"] == 2);
    CHECK(j["intermediates"]["p"] == 0);
    CHECK(j["intermediates"]["W"] == 2);

    InvariantReport comp;
    comp.method = Method::formula;
    comp.depth = 2;
    comp.reg = 2;
    comp.t_depth = 2;
    comp.s_depth = 2;
    comp.t_reg = 0;
    comp.sides = std::array<SideQuantities, 2>{SideQuantities{2, 2, 1, 1, 0},
                                               SideQuantities{2, 2, 1, 1, 0}};
    json cj = invariant_report_to_json(comp);
    CHECK(cj["intermediates"]["t"] == 2);
    CHECK(cj["intermediates"]["s"] == 2);
    CHECK(cj["intermediates"]["t_reg"] == 0);
    CHECK(cj["intermediates"]["sides"][0]["T"] == 1);
    CHECK(!cj.contains("dim"));
}

TEST_CASE("realization document carries graph and labels") {
    FanGraphSpec spec;
    spec.base_size = 2;
    spec.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {2}}};
    json j = realization_to_json(spec, realize(spec));
    CHECK(j["graph"]["vertices"].size() == 4);
    CHECK(j["labels"]["base"] == 2);
    CHECK(j["labels"]["branches"][0]["block"] == 1);
    CHECK(j["labels"]["branches"][0]["vertices"][0] == 3);
}
