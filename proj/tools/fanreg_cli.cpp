// Command-line surface: realize fan/composite specs, evaluate invariants by
// formula and oracle, run verification campaigns, inspect ideal
// decompositions and Betti tables.
//
// Exit codes: 0 success / all match, 1 usage or validation failure,
// 2 formula-oracle mismatch, 3 capacity exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fanreg/betti.hpp"
#include "fanreg/compose.hpp"
#include "fanreg/formulas.hpp"
#include "fanreg/generate.hpp"
#include "fanreg/io.hpp"
#include "fanreg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitCapacity = 3;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw fanreg::validation_error("cannot write file: " + out_path);
    out << text;
}

enum class InputKind { graph, fan, composite };

InputKind classify_input(const fanreg::json& j) {
    if (j.is_object() && j.contains("op")) return InputKind::composite;
    if (j.is_object() && j.contains("blocks")) return InputKind::fan;
    if (j.is_object() && j.contains("edges")) return InputKind::graph;
    throw fanreg::validation_error(
        "unrecognized input document (expected a graph, fan spec, or composite spec)");
}

fanreg::Field parse_field(const std::string& name) {
    if (name == "f2") return fanreg::Field::gf2;
    if (name == "q") return fanreg::Field::rationals;
    throw fanreg::validation_error("unknown field: " + name);
}

std::string verdict_of(const fanreg::InvariantReport& formula,
                       const fanreg::InvariantReport& oracle) {
    auto same = [](const std::optional<int>& a, const std::optional<int>& b) {
        return !a || !b || *a == *b;
    };
    bool ok = same(formula.dim, oracle.dim) && same(formula.depth, oracle.depth) &&
              same(formula.reg, oracle.reg);
    return ok ? "match" : "mismatch";
}

std::string report_table(const fanreg::InvariantReport& r) {
    std::string line = std::string(fanreg::to_string(r.method)) + ":";
    if (r.dim) line += "  dim " + std::to_string(*r.dim);
    if (r.depth) line += "  depth " + std::to_string(*r.depth);
    if (r.reg) line += "  reg " + std::to_string(*r.reg);
    return line + "\n";
}

int cmd_build(const std::string& input, const std::string& out) {
    fanreg::json doc = fanreg::load_json_file(input);
    fanreg::json result;
    if (classify_input(doc) == InputKind::composite) {
        auto spec = fanreg::composite_spec_from_json(doc);
        result = fanreg::realization_to_json(spec, fanreg::realize(spec));
    } else {
        auto spec = fanreg::fan_spec_from_json(doc);
        result = fanreg::realization_to_json(spec, fanreg::realize(spec));
    }
    write_output(out, fanreg::dump_json(result));
    return kExitOk;
}

int cmd_invariants(const std::string& input, const std::string& method,
                   fanreg::Field field, const std::string& out,
                   const std::string& format) {
    fanreg::json doc = fanreg::load_json_file(input);
    InputKind kind = classify_input(doc);

    std::optional<fanreg::InvariantReport> formula;
    std::string formula_note;
    fanreg::SimpleGraph graph;
    switch (kind) {
        case InputKind::graph: {
            if (method != "oracle")
                throw fanreg::validation_error(
                    "a raw graph has no formula route; use --method oracle");
            graph = fanreg::graph_from_json(doc);
            break;
        }
        case InputKind::fan: {
            auto spec = fanreg::fan_spec_from_json(doc);
            if (method != "oracle") formula = fanreg::fan_formula_report(spec);
            graph = fanreg::realize(spec).graph;
            break;
        }
        case InputKind::composite: {
            auto spec = fanreg::composite_spec_from_json(doc);
            if (method != "oracle") {
                try {
                    formula = fanreg::composite_formula_report(spec);
                } catch (const fanreg::hypothesis_error& e) {
                    if (method == "formula") throw;
                    formula_note = e.what();
                }
            }
            graph = fanreg::realize(spec).graph;
            break;
        }
    }

    std::optional<fanreg::InvariantReport> oracle;
    if (method != "formula")
        oracle = fanreg::oracle_invariants(fanreg::edge_ideal(graph), field);

    fanreg::json j;
    std::string verdict;
    if (formula) j["formula"] = fanreg::invariant_report_to_json(*formula);
    if (!formula_note.empty()) j["note"] = formula_note;
    if (oracle) j["oracle"] = fanreg::invariant_report_to_json(*oracle);
    if (method == "both") {
        verdict = !formula ? "formula-inapplicable" : verdict_of(*formula, *oracle);
        j["verdict"] = verdict;
    }

    if (format == "json") {
        write_output(out, fanreg::dump_json(j));
    } else {
        std::string text;
        if (formula) text += report_table(*formula);
        if (!formula_note.empty()) text += "formula: inapplicable (" + formula_note + ")\n";
        if (oracle) text += report_table(*oracle);
        if (!verdict.empty()) text += "verdict: " + verdict + "\n";
        write_output(out, text);
    }
    return verdict == "mismatch" ? kExitMismatch : kExitOk;
}

int cmd_verify(const fanreg::GeneratorConfig& config, fanreg::Field field,
               const std::string& out, const std::string& format) {
    auto result = fanreg::run_verification(config, field);
    fanreg::json j = fanreg::campaign_to_json(config, field, result);
    if (format == "json" || !out.empty()) write_output(out, fanreg::dump_json(j));
    if (format == "table") {
        std::string text;
        for (const auto& rec : result.records) {
            text += rec.id + "  " + fanreg::to_string(rec.verdict);
            if (!rec.note.empty()) text += "  (" + rec.note + ")";
            char timing[64];
            std::snprintf(timing, sizeof(timing), "  [formula %.2f ms, oracle %.2f ms]",
                          rec.formula_ms, rec.oracle_ms);
            text += timing;
            text += "\n";
        }
        text += "match " + std::to_string(result.summary.match) + ", mismatch " +
                std::to_string(result.summary.mismatch) + ", formula-inapplicable " +
                std::to_string(result.summary.inapplicable) + ", total " +
                std::to_string(result.summary.total()) + "\n";
        std::cout << text;
    }
    return result.summary.mismatch > 0 ? kExitMismatch : kExitOk;
}

int cmd_decompose(const std::string& input, int vertex, fanreg::Field field,
                  const std::string& out, const std::string& format) {
    fanreg::SimpleGraph g = fanreg::graph_from_json(fanreg::load_json_file(input));
    auto [J, K] = fanreg::decompose_at_vertex(g, vertex);
    auto sum = fanreg::ideal_sum(J, K);
    auto intersection = fanreg::ideal_intersect(J, K);

    // The four contracts of the vertex splitting.
    std::vector<fanreg::Vertex> closed = fanreg::closed_neighborhood(g, vertex);
    std::vector<std::vector<fanreg::Vertex>> expected_sum_gens;
    for (fanreg::Vertex v : closed) expected_sum_gens.push_back({v});
    fanreg::SimpleGraph far = fanreg::remove_vertices(g, closed);
    for (const auto& e : far.edges()) expected_sum_gens.push_back({e.first, e.second});
    fanreg::SquarefreeMonomialIdeal expected_sum(g.vertices(),
                                                 std::move(expected_sum_gens));
    bool sum_ok = sum == expected_sum;
    bool intersect_ok = intersection == fanreg::edge_ideal(g);
    auto j_report = fanreg::oracle_invariants(J, field);
    auto sum_report = fanreg::oracle_invariants(sum, field);
    bool depth_ok = *j_report.depth == *sum_report.depth + 1;
    bool reg_ok = *j_report.reg == *sum_report.reg;
    bool all_ok = sum_ok && intersect_ok && depth_ok && reg_ok;

    fanreg::json j;
    j["vertex"] = vertex;
    j["J"] = fanreg::ideal_to_json(J);
    j["K"] = fanreg::ideal_to_json(K);
    j["sum"] = fanreg::ideal_to_json(sum);
    j["intersection"] = fanreg::ideal_to_json(intersection);
    fanreg::json contracts;
    contracts["sum_identity"] = sum_ok;
    contracts["intersection_identity"] = intersect_ok;
    contracts["depth_shift"] = depth_ok;
    contracts["reg_equal"] = reg_ok;
    j["contracts"] = std::move(contracts);

    if (format == "json") {
        write_output(out, fanreg::dump_json(j));
    } else {
        std::string text;
        auto show = [&](const char* name, const fanreg::SquarefreeMonomialIdeal& ideal) {
            text += std::string(name) + " = " + fanreg::ideal_to_json(ideal)["generators"].dump() + "\n";
        };
        show("J", J);
        show("K", K);
        show("J+K", sum);
        show("J∩K", intersection);
        text += std::string("sum identity: ") + (sum_ok ? "pass" : "FAIL") + "\n";
        text += std::string("intersection identity: ") + (intersect_ok ? "pass" : "FAIL") + "\n";
        text += std::string("depth(S/J) = depth(S/(J+K)) + 1: ") +
                (depth_ok ? "pass" : "FAIL") + "\n";
        text += std::string("reg(S/J) = reg(S/(J+K)): ") + (reg_ok ? "pass" : "FAIL") + "\n";
        write_output(out, text);
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_betti(const std::string& input, const std::string& engine, fanreg::Field field,
              const std::string& out, const std::string& format) {
    fanreg::json doc = fanreg::load_json_file(input);
    fanreg::SimpleGraph graph;
    switch (classify_input(doc)) {
        case InputKind::graph: graph = fanreg::graph_from_json(doc); break;
        case InputKind::fan:
            graph = fanreg::realize(fanreg::fan_spec_from_json(doc)).graph;
            break;
        case InputKind::composite:
            graph = fanreg::realize(fanreg::composite_spec_from_json(doc)).graph;
            break;
    }
    auto ideal = fanreg::edge_ideal(graph);
    fanreg::BettiTable table = engine == "taylor"
                                   ? fanreg::betti_table_taylor(ideal, field)
                                   : fanreg::betti_table_hochster(ideal, field);
    if (format == "json") {
        write_output(out, fanreg::dump_json(fanreg::betti_table_to_json(table)));
    } else {
        std::string text;
        for (const auto& [key, beta] : table.entries)
            text += "beta(" + std::to_string(key.first) + ", " +
                    std::to_string(key.second) + ") = " + std::to_string(beta) + "\n";
        text += "pd " + std::to_string(table.projective_dimension()) + ", depth " +
                std::to_string(table.depth()) + ", reg " +
                std::to_string(table.regularity()) + "\n";
        write_output(out, text);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fan graph edge-ideal invariants: formulas vs. algebraic oracles"};
    app.require_subcommand(1);

    std::string input, out, format = "table", method = "both", field_name = "f2";
    std::string engine = "hochster", family_name = "fans";
    int vertex = 0;
    fanreg::GeneratorConfig config;
    config.samples = -1;  // sentinel: family-dependent default

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out, "write the result to this file instead of stdout");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
    };

    auto* build = app.add_subcommand("build", "realize a fan or composite spec file");
    build->add_option("spec", input, "spec file (json)")->required();
    build->add_option("--out", out, "write the result to this file instead of stdout");

    auto* invariants =
        app.add_subcommand("invariants", "dim/depth/reg of a spec or graph file");
    invariants->add_option("input", input, "fan spec, composite spec, or graph file")
        ->required();
    invariants->add_option("--method", method, "formula, oracle, or both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    invariants->add_option("--field", field_name, "coefficient field for the oracle")
        ->check(CLI::IsMember({"f2", "q"}));
    add_common(invariants);

    auto* verify = app.add_subcommand("verify", "run a formula-vs-oracle campaign");
    verify->add_option("--family", family_name, "instance family")
        ->check(CLI::IsMember({"fans", "circ", "star", "paths", "completes"}));
    verify->add_option("--max-vertices", config.max_vertices,
                       "cap on realized vertex count");
    verify->add_option("--samples", config.samples,
                       "instance cap (0 = exhaustive; circ/star default 100)");
    verify->add_option("--seed", config.seed, "seed for any sampling");
    verify->add_option("--field", field_name, "coefficient field for the oracle")
        ->check(CLI::IsMember({"f2", "q"}));
    add_common(verify);

    auto* decompose =
        app.add_subcommand("decompose", "vertex splitting J, K of a graph's edge ideal");
    decompose->add_option("input", input, "graph file")->required();
    decompose->add_option("--vertex", vertex, "splitting vertex")->required();
    decompose->add_option("--field", field_name, "coefficient field for the oracle")
        ->check(CLI::IsMember({"f2", "q"}));
    add_common(decompose);

    auto* betti = app.add_subcommand("betti", "graded Betti table of an edge ideal");
    betti->add_option("input", input, "fan spec, composite spec, or graph file")
        ->required();
    betti->add_option("--engine", engine, "betti engine")
        ->check(CLI::IsMember({"hochster", "taylor"}));
    betti->add_option("--field", field_name, "coefficient field")
        ->check(CLI::IsMember({"f2", "q"}));
    add_common(betti);

    CLI11_PARSE(app, argc, argv);

    try {
        fanreg::Field field = parse_field(field_name);
        if (build->parsed()) return cmd_build(input, out);
        if (invariants->parsed()) return cmd_invariants(input, method, field, out, format);
        if (verify->parsed()) {
            config.family = fanreg::family_from_string(family_name);
            if (config.samples < 0)
                config.samples = (config.family == fanreg::Family::circ ||
                                  config.family == fanreg::Family::star)
                                     ? 100
                                     : 0;
            return cmd_verify(config, field, out, format);
        }
        if (decompose->parsed()) return cmd_decompose(input, vertex, field, out, format);
        if (betti->parsed()) return cmd_betti(input, engine, field, out, format);
    } catch (const fanreg::capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const fanreg::hypothesis_error& e) {
        std::cerr << "formula inapplicable: " << e.what() << "\n";
        return kExitUsage;
    } catch (const fanreg::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
