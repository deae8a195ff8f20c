#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "fanreg/betti.hpp"
#include "fanreg/formulas.hpp"
#include "fanreg/generate.hpp"
#include "fanreg/graph_invariants.hpp"
#include "fanreg/io.hpp"
#include "fanreg/util.hpp"

namespace fanreg {

enum class Verdict { match, mismatch, formula_inapplicable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::formula_inapplicable: return "formula-inapplicable";
    }
    return "?";
}

struct VerificationRecord {
    std::string id;
    std::string digest;
    std::optional<InvariantReport> formula;
    std::optional<InvariantReport> oracle;
    Verdict verdict = Verdict::match;
    /// Failed theorem hypothesis when inapplicable; mismatch detail otherwise.
    std::string note;
    /// Wall-clock per phase; informational only, never serialized into
    /// record files (those must be byte-reproducible).
    double formula_ms = 0.0;
    double oracle_ms = 0.0;
};

struct VerifySummary {
    int match = 0;
    int mismatch = 0;
    int inapplicable = 0;
    int total() const { return match + mismatch + inapplicable; }
};

struct CampaignResult {
    std::vector<VerificationRecord> records;
    VerifySummary summary;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

inline bool reports_disagree(const InvariantReport& formula, const InvariantReport& oracle,
                             std::string& why) {
    auto differ = [&](const char* name, const std::optional<int>& a,
                      const std::optional<int>& b) {
        if (a && b && *a != *b) {
            why += std::string(why.empty() ? "" : "; ") + name + " formula=" +
                   std::to_string(*a) + " oracle=" + std::to_string(*b);
            return true;
        }
        return false;
    };
    bool bad = false;
    bad |= differ("dim", formula.dim, oracle.dim);
    bad |= differ("depth", formula.depth, oracle.depth);
    bad |= differ("reg", formula.reg, oracle.reg);
    return bad;
}

}  // namespace detail

/// Run formula and oracle on one instance and compare.  Cross-checks beyond
/// the plain report comparison: fan regularity against the induced matching
/// number, fan dimension against the graph cover route, and the composition
/// depth lower bound against the sides' oracle depths.
inline VerificationRecord verify_instance(const Instance& inst, Field field) {
    VerificationRecord rec;
    rec.id = inst.id;
    rec.digest = inst.digest();

    SimpleGraph graph;
    auto started = std::chrono::steady_clock::now();
    try {
        switch (inst.kind) {
            case Instance::Kind::fan: {
                rec.formula = fan_formula_report(inst.fan_spec);
                graph = realize(inst.fan_spec).graph;
                break;
            }
            case Instance::Kind::composite: {
                try {
                    rec.formula = composite_formula_report(inst.composite);
                } catch (const hypothesis_error& e) {
                    rec.note = e.what();
                }
                graph = realize(inst.composite).graph;
                break;
            }
            case Instance::Kind::path: {
                auto [depth, reg] = path_invariants(inst.n);
                InvariantReport r;
                r.method = Method::formula;
                r.depth = depth;
                r.reg = reg;
                rec.formula = r;
                graph = SimpleGraph::path(inst.n);
                break;
            }
            case Instance::Kind::complete: {
                auto [depth, reg] = complete_invariants(inst.n);
                InvariantReport r;
                r.method = Method::formula;
                r.dim = 1;
                r.depth = depth;
                r.reg = reg;
                rec.formula = r;
                graph = SimpleGraph::complete(inst.n);
                break;
            }
        }
    } catch (const hypothesis_error& e) {
        rec.note = e.what();
    }
    rec.formula_ms = detail::ms_since(started);

    started = std::chrono::steady_clock::now();
    rec.oracle = oracle_invariants(edge_ideal(graph), field);
    rec.oracle_ms = detail::ms_since(started);

    std::string why;
    if (!rec.formula) {
        rec.verdict = Verdict::formula_inapplicable;
        return rec;
    }
    bool bad = detail::reports_disagree(*rec.formula, *rec.oracle, why);

    if (inst.kind == Instance::Kind::fan) {
        int theta = induced_matching_number(graph);
        if (theta != *rec.oracle->reg) {
            bad = true;
            why += std::string(why.empty() ? "" : "; ") +
                   "induced matching number " + std::to_string(theta) +
                   " differs from oracle reg " + std::to_string(*rec.oracle->reg);
        }
        int dim_cover = graph.vertex_count() - min_vertex_cover_size(graph);
        if (dim_cover != *rec.oracle->dim) {
            bad = true;
            why += std::string(why.empty() ? "" : "; ") + "cover dimension route " +
                   std::to_string(dim_cover) + " differs from oracle dim " +
                   std::to_string(*rec.oracle->dim);
        }
    }
    if (inst.kind == Instance::Kind::composite) {
        auto left = oracle_invariants(edge_ideal(realize(inst.composite.left.spec).graph),
                                      field);
        auto right = oracle_invariants(
            edge_ideal(realize(inst.composite.right.spec).graph), field);
        if (*rec.oracle->depth < *left.depth + *right.depth - 2) {
            bad = true;
            why += std::string(why.empty() ? "" : "; ") +
                   "depth lower bound violated: " + std::to_string(*rec.oracle->depth) +
                   " < " + std::to_string(*left.depth + *right.depth - 2);
        }
    }

    rec.verdict = bad ? Verdict::mismatch : Verdict::match;
    rec.note = why;
    return rec;
}

/// Run the whole campaign.  Instances verify independently (and in
/// parallel); records keep the generation order so output is reproducible.
inline CampaignResult run_verification(const GeneratorConfig& config, Field field,
                                       unsigned threads = 0) {
    auto instances = generate_instances(config);
    CampaignResult result;
    result.records.resize(instances.size());
    parallel_for(
        instances.size(),
        [&](std::size_t i) { result.records[i] = verify_instance(instances[i], field); },
        threads);
    for (const auto& rec : result.records) {
        switch (rec.verdict) {
            case Verdict::match: ++result.summary.match; break;
            case Verdict::mismatch: ++result.summary.mismatch; break;
            case Verdict::formula_inapplicable: ++result.summary.inapplicable; break;
        }
    }
    return result;
}

inline json record_to_json(const VerificationRecord& rec) {
    json j;
    j["id"] = rec.id;
    j["digest"] = rec.digest;
    j["verdict"] = to_string(rec.verdict);
    if (rec.formula) j["formula"] = invariant_report_to_json(*rec.formula);
    if (rec.oracle) j["oracle"] = invariant_report_to_json(*rec.oracle);
    if (!rec.note.empty()) j["note"] = rec.note;
    return j;
}

inline json summary_to_json(const VerifySummary& s) {
    json j;
    j["match"] = s.match;
    j["mismatch"] = s.mismatch;
    j["formula_inapplicable"] = s.inapplicable;
    j["total"] = s.total();
    return j;
}

/// The byte-stable record file for a campaign (timings excluded).
inline json campaign_to_json(const GeneratorConfig& config, Field field,
                             const CampaignResult& result) {
    json j;
    json cj;
    cj["family"] = to_string(config.family);
    cj["max_vertices"] = config.max_vertices;
    cj["samples"] = config.samples;
    cj["seed"] = config.seed;
    cj["field"] = to_string(field);
    j["config"] = std::move(cj);
    json records = json::array();
    for (const auto& rec : result.records) records.push_back(record_to_json(rec));
    j["records"] = std::move(records);
    j["summary"] = summary_to_json(result.summary);
    return j;
}

}  // namespace fanreg
