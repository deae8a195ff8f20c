#include <doctest.h>

#include <set>

#include "fanreg/generate.hpp"
#include "fanreg/verify.hpp"

using namespace fanreg;

TEST_CASE("completes and paths enumerate the stated range") {
    GeneratorConfig config;
    config.family = Family::completes;
    config.max_vertices = 8;
    auto completes = generate_instances(config);
    CHECK(completes.size() == 7);  // K_2 .. K_8
    CHECK(completes.front().n == 2);
    CHECK(completes.back().n == 8);

    config.family = Family::paths;
    config.max_vertices = 12;
    auto paths = generate_instances(config);
    CHECK(paths.size() == 11);  // P_2 .. P_12
}

TEST_CASE("fan enumeration membership and validity") {
    GeneratorConfig config;
    config.family = Family::fans;
    config.max_vertices = 5;
    auto instances = generate_instances(config);

    // the P_4 spec (two pendant edges on K_2) must be present
    FanGraphSpec p4;
    p4.base_size = 2;
    p4.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {2}}};
    bool found = false;
    for (const auto& inst : instances)
        if (inst.fan_spec == p4) found = true;
    CHECK(found);

    std::set<std::string> ids;
    for (const auto& inst : instances) {
        CHECK_NOTHROW(inst.fan_spec.validate());
        CHECK(inst.fan_spec.realized_vertex_count() <= 5);
        CHECK(ids.insert(inst.id).second);
    }

    // blocks arrive in canonical order: no stream entry repeats a block
    // multiset in another order, so all specs are distinct
    std::set<std::string> digests;
    for (const auto& inst : instances) CHECK(digests.insert(inst.digest()).second);
}

TEST_CASE("composite sampling is deterministic and respects bounds") {
    GeneratorConfig config;
    config.family = Family::circ;
    config.max_vertices = 10;
    config.samples = 25;
    config.seed = 7;
    auto a = generate_instances(config);
    auto b = generate_instances(config);
    REQUIRE(a.size() == 25);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].digest() == b[i].digest());
        CHECK(realize(a[i].composite).graph.vertex_count() <= 10);
    }

    config.seed = 8;
    auto c = generate_instances(config);
    bool any_difference = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].digest() != c[i].digest()) any_difference = true;
    CHECK(any_difference);
}

TEST_CASE("verification campaigns match on the tiny families") {
    GeneratorConfig config;
    config.family = Family::paths;
    config.max_vertices = 8;
    auto result = run_verification(config, Field::gf2);
    CHECK(result.summary.total() == 7);
    CHECK(result.summary.match == 7);
    CHECK(result.summary.mismatch == 0);

    config.family = Family::fans;
    config.max_vertices = 6;
    auto fans = run_verification(config, Field::gf2);
    CHECK(fans.summary.mismatch == 0);
    CHECK(fans.summary.inapplicable == 0);
    CHECK(fans.summary.match == fans.summary.total());
    CHECK(fans.summary.total() == static_cast<int>(fans.records.size()));
}

TEST_CASE("campaign output is deterministic") {
    GeneratorConfig config;
    config.family = Family::star;
    config.max_vertices = 9;
    config.samples = 10;
    config.seed = 42;
    auto first = campaign_to_json(config, Field::gf2, run_verification(config, Field::gf2));
    auto second = campaign_to_json(config, Field::gf2, run_verification(config, Field::gf2));
    CHECK(first.dump(2) == second.dump(2));
}

TEST_CASE("inapplicable formulas carry the failed hypothesis") {
    // a star composite whose left side is a degenerate fan: the glue is
    // constructible (K_2 has a degree-1 vertex) but the theorems need k >= 1
    FanGraphSpec k2;
    k2.base_size = 2;
    FanGraphSpec p4;
    p4.base_size = 2;
    p4.blocks = {FanBlock{{1}, {2}}, FanBlock{{2}, {2}}};

    Instance inst;
    inst.kind = Instance::Kind::composite;
    inst.id = "star/manual";
    inst.composite.op = GlueOp::star;
    inst.composite.left = {k2, 2};
    inst.composite.right = {p4, 3};
    auto rec = verify_instance(inst, Field::gf2);
    CHECK(rec.verdict == Verdict::formula_inapplicable);
    CHECK(rec.note.find("k >= 1") != std::string::npos);
    CHECK(rec.oracle.has_value());
}
