#pragma once

#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fanreg/betti.hpp"
#include "fanreg/compose.hpp"
#include "fanreg/errors.hpp"
#include "fanreg/fan.hpp"
#include "fanreg/graph.hpp"
#include "fanreg/report.hpp"

namespace fanreg {

using json = nlohmann::ordered_json;

namespace detail {

inline int require_int(const json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw validation_error(what + " must be an integer");
    return j.get<int>();
}

inline const json& require_field(const json& j, const std::string& key,
                                 const std::string& what) {
    if (!j.is_object() || !j.contains(key))
        throw validation_error(what + " is missing field \"" + key + "\"");
    return j.at(key);
}

inline std::vector<int> require_int_list(const json& j, const std::string& what) {
    if (!j.is_array()) throw validation_error(what + " must be a list");
    std::vector<int> out;
    for (const auto& item : j) out.push_back(require_int(item, what + " entry"));
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph files: {"vertices": [...], "edges": [[u, v], ...]} with u < v

inline json graph_to_json(const SimpleGraph& g) {
    json j;
    j["vertices"] = g.vertices();
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    return j;
}

inline SimpleGraph graph_from_json(const json& j) {
    auto vertices = detail::require_int_list(detail::require_field(j, "vertices", "graph"),
                                             "vertex");
    {
        std::set<Vertex> seen;
        for (Vertex v : vertices)
            if (!seen.insert(v).second)
                throw validation_error("duplicate vertex " + std::to_string(v));
    }
    const json& edges = detail::require_field(j, "edges", "graph");
    if (!edges.is_array()) throw validation_error("graph edges must be a list");
    std::vector<Edge> es;
    std::set<Edge> seen;
    for (const auto& item : edges) {
        auto pair = detail::require_int_list(item, "edge");
        if (pair.size() != 2)
            throw validation_error("edge must have exactly 2 endpoints");
        if (pair[0] == pair[1])
            throw validation_error("loop edge at vertex " + std::to_string(pair[0]));
        if (pair[0] > pair[1])
            throw validation_error("edge endpoints must satisfy u < v, got [" +
                                   std::to_string(pair[0]) + ", " +
                                   std::to_string(pair[1]) + "]");
        Edge e{pair[0], pair[1]};
        if (!seen.insert(e).second)
            throw validation_error("duplicate edge [" + std::to_string(e.first) + ", " +
                                   std::to_string(e.second) + "]");
        es.push_back(e);
    }
    return SimpleGraph(std::move(vertices), es);
}

// ---------------------------------------------------------------------------
// fan spec files: {"n": int, "blocks": [{"vertices": [...], "branch_sizes": [...]}]}

inline json fan_spec_to_json(const FanGraphSpec& spec) {
    json j;
    j["n"] = spec.base_size;
    json blocks = json::array();
    for (const FanBlock& b : spec.blocks) {
        json bj;
        bj["vertices"] = b.vertices;
        bj["branch_sizes"] = b.branch_sizes;
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline FanGraphSpec fan_spec_from_json(const json& j) {
    FanGraphSpec spec;
    spec.base_size = detail::require_int(detail::require_field(j, "n", "fan spec"), "n");
    const json& blocks = detail::require_field(j, "blocks", "fan spec");
    if (!blocks.is_array()) throw validation_error("fan spec blocks must be a list");
    for (const auto& bj : blocks) {
        FanBlock b;
        b.vertices = detail::require_int_list(
            detail::require_field(bj, "vertices", "fan block"), "block vertex");
        b.branch_sizes = detail::require_int_list(
            detail::require_field(bj, "branch_sizes", "fan block"), "branch size");
        spec.blocks.push_back(std::move(b));
    }
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// composite spec files:
// {"op": "circ"|"star", "left": {"spec": <fan>, "leaf": int}, "right": {...}}

inline json composite_spec_to_json(const CompositeSpec& c) {
    json j;
    j["op"] = to_string(c.op);
    json left;
    left["spec"] = fan_spec_to_json(c.left.spec);
    left["leaf"] = c.left.leaf;
    j["left"] = std::move(left);
    json right;
    right["spec"] = fan_spec_to_json(c.right.spec);
    right["leaf"] = c.right.leaf;
    j["right"] = std::move(right);
    return j;
}

inline CompositeSpec composite_spec_from_json(const json& j) {
    CompositeSpec c;
    const json& op = detail::require_field(j, "op", "composite spec");
    if (op == "circ")
        c.op = GlueOp::circ;
    else if (op == "star")
        c.op = GlueOp::star;
    else
        throw validation_error("composite op must be \"circ\" or \"star\"");
    auto side = [](const json& sj, const std::string& what) {
        CompositeSide s;
        s.spec = fan_spec_from_json(detail::require_field(sj, "spec", what));
        s.leaf = detail::require_int(detail::require_field(sj, "leaf", what), "leaf");
        return s;
    };
    c.left = side(detail::require_field(j, "left", "composite spec"), "left side");
    c.right = side(detail::require_field(j, "right", "composite spec"), "right side");
    return c;
}

// ---------------------------------------------------------------------------
// invariant reports

inline json invariant_report_to_json(const InvariantReport& r) {
    json j;
    j["method"] = to_string(r.method);
    if (r.dim) j["dim"] = *r.dim;
    if (r.depth) j["depth"] = *r.depth;
    if (r.reg) j["reg"] = *r.reg;
    json inter;
    if (r.p) inter["p"] = *r.p;
    if (r.attach_size) inter["W"] = *r.attach_size;
    if (r.sides) {
        json sides = json::array();
        for (const SideQuantities& s : *r.sides) {
            json sj;
            sj["n"] = s.base_size;
            sj["W"] = s.attach_size;
            sj["T"] = s.T;
            sj["Tprime"] = s.T_prime;
            sj["p"] = s.p;
            sides.push_back(std::move(sj));
        }
        inter["sides"] = std::move(sides);
    }
    if (r.t_depth) inter["t"] = *r.t_depth;
    if (r.s_depth) inter["s"] = *r.s_depth;
    if (r.t_reg) inter["t_reg"] = *r.t_reg;
    if (!inter.empty()) j["intermediates"] = std::move(inter);
    return j;
}

// ---------------------------------------------------------------------------
// betti tables: {"n", "entries": [{"i","j","beta"}...], "pd", "depth", "reg"}

inline json betti_table_to_json(const BettiTable& t) {
    json j;
    j["n"] = t.variable_count;
    json entries = json::array();
    for (const auto& [key, beta] : t.entries) {
        json e;
        e["i"] = key.first;
        e["j"] = key.second;
        e["beta"] = beta;
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    j["pd"] = t.projective_dimension();
    j["depth"] = t.depth();
    j["reg"] = t.regularity();
    return j;
}

inline json ideal_to_json(const SquarefreeMonomialIdeal& ideal) {
    json j;
    j["variables"] = ideal.variables();
    json gens = json::array();
    for (const auto& g : ideal.generators()) gens.push_back(g);
    j["generators"] = std::move(gens);
    return j;
}

// ---------------------------------------------------------------------------
// realization output (cmd_build)

inline json fan_labels_to_json(const FanRealization& r) {
    json branches = json::array();
    for (std::size_t i = 0; i < r.branch_vertices.size(); ++i)
        for (std::size_t pos = 0; pos < r.branch_vertices[i].size(); ++pos) {
            json b;
            b["block"] = static_cast<int>(i) + 1;
            b["position"] = static_cast<int>(pos) + 1;
            b["vertices"] = r.branch_vertices[i][pos];
            branches.push_back(std::move(b));
        }
    return branches;
}

inline json realization_to_json(const FanGraphSpec& spec, const FanRealization& r) {
    json j;
    j["graph"] = graph_to_json(r.graph);
    json labels;
    labels["base"] = spec.base_size;
    labels["branches"] = fan_labels_to_json(r);
    j["labels"] = std::move(labels);
    return j;
}

inline json realization_to_json(const CompositeSpec& spec, const CompositeRealization& r) {
    json j;
    j["graph"] = graph_to_json(r.graph);
    json labels;
    labels["op"] = to_string(spec.op);
    labels["joint"] = r.joint;
    labels["right_shift"] = r.right_shift;
    labels["left_branches"] = fan_labels_to_json(r.left);
    labels["right_branches"] = fan_labels_to_json(r.right);
    j["labels"] = std::move(labels);
    return j;
}

// ---------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fanreg
