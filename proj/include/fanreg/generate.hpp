#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fanreg/compose.hpp"
#include "fanreg/errors.hpp"
#include "fanreg/fan.hpp"
#include "fanreg/io.hpp"
#include "fanreg/util.hpp"

namespace fanreg {

enum class Family { fans, circ, star, paths, completes };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::fans: return "fans";
        case Family::circ: return "circ";
        case Family::star: return "star";
        case Family::paths: return "paths";
        case Family::completes: return "completes";
    }
    return "?";
}

inline Family family_from_string(const std::string& s) {
    if (s == "fans") return Family::fans;
    if (s == "circ") return Family::circ;
    if (s == "star") return Family::star;
    if (s == "paths") return Family::paths;
    if (s == "completes") return Family::completes;
    throw validation_error("unknown family: " + s);
}

/// Instance stream configuration.  Identical configs produce identical
/// streams: enumeration order is fixed and all sampling runs off the seed.
struct GeneratorConfig {
    Family family = Family::fans;
    int max_vertices = 11;
    /// Cap on emitted instances; 0 means exhaustive for the enumerable
    /// families.  The pairing families (circ/star) always sample and treat
    /// 0 as 100.
    int samples = 0;
    std::uint64_t seed = 42;
};

struct Instance {
    enum class Kind { fan, composite, path, complete };
    Kind kind = Kind::fan;
    std::string id;
    FanGraphSpec fan_spec;   // kind == fan
    CompositeSpec composite; // kind == composite
    int n = 0;               // kind == path / complete

    json spec_json() const {
        switch (kind) {
            case Kind::fan: return fan_spec_to_json(fan_spec);
            case Kind::composite: return composite_spec_to_json(composite);
            case Kind::path: {
                json j;
                j["graph"] = "path";
                j["n"] = n;
                return j;
            }
            case Kind::complete: {
                json j;
                j["graph"] = "complete";
                j["n"] = n;
                return j;
            }
        }
        return json::object();
    }

    std::string digest() const { return to_hex(fnv1a64(spec_json().dump())); }
};

namespace detail {

/// Enumerate every fan spec with realized size within the budget, up to
/// permutation of the blocks.  Blocks are produced in a canonical
/// nondecreasing order keyed by (size, excess list), and the attach sets
/// are laid out consecutively from vertex 1, so the stream is exhaustive
/// over isomorphism-distinct block multisets and fully deterministic.
inline std::vector<FanGraphSpec> enumerate_fan_specs(int max_vertices) {
    std::vector<FanGraphSpec> out;
    using BlockShape = std::vector<int>;  // excess list h_1..h_r

    for (int n = 2; n <= max_vertices; ++n) {
        std::vector<BlockShape> current;
        auto emit = [&]() {
            FanGraphSpec spec;
            spec.base_size = n;
            Vertex next = 1;
            for (const BlockShape& shape : current) {
                FanBlock b;
                for (std::size_t j = 0; j < shape.size(); ++j) {
                    b.vertices.push_back(next++);
                    b.branch_sizes.push_back(shape[j] + static_cast<int>(j) + 1);
                }
                spec.blocks.push_back(std::move(b));
            }
            out.push_back(std::move(spec));
        };

        // Excess lists of fixed length with a fresh-vertex budget, in
        // lexicographic order.
        auto shapes_of_length = [&](int r, int budget) {
            std::vector<BlockShape> shapes;
            BlockShape shape(r, 1);
            auto rec = [&](auto&& self, int pos, int left) -> void {
                if (pos == r) {
                    shapes.push_back(shape);
                    return;
                }
                int remaining_positions = r - pos - 1;
                for (int h = 1; h <= left - remaining_positions; ++h) {
                    shape[pos] = h;
                    self(self, pos + 1, left - h);
                }
            };
            rec(rec, 0, budget);
            return shapes;
        };

        auto rec = [&](auto&& self, int vertex_budget, int fresh_budget,
                       const BlockShape& min_shape) -> void {
            emit();
            for (int r = 1; r <= vertex_budget; ++r) {
                if (r > fresh_budget) break;  // each position needs excess >= 1
                for (const BlockShape& shape : shapes_of_length(r, fresh_budget)) {
                    // canonical order: (length, lexicographic excess list)
                    if (shape.size() < min_shape.size()) continue;
                    if (shape.size() == min_shape.size() && shape < min_shape) continue;
                    int used = 0;
                    for (int h : shape) used += h;
                    current.push_back(shape);
                    self(self, vertex_budget - r, fresh_budget - used, shape);
                    current.pop_back();
                }
            }
        };
        rec(rec, n, max_vertices - n, BlockShape{});
    }
    return out;
}

}  // namespace detail

/// Deterministic instance stream for one family.
inline std::vector<Instance> generate_instances(const GeneratorConfig& config) {
    if (config.max_vertices < 2)
        throw validation_error("max_vertices must be at least 2");
    std::vector<Instance> out;
    auto pad = [](int k) {
        std::string s = std::to_string(k);
        while (s.size() < 5) s.insert(s.begin(), '0');
        return s;
    };

    switch (config.family) {
        case Family::paths: {
            for (int n = 2; n <= config.max_vertices; ++n) {
                Instance inst;
                inst.kind = Instance::Kind::path;
                inst.n = n;
                inst.id = "paths/" + pad(n);
                out.push_back(std::move(inst));
            }
            break;
        }
        case Family::completes: {
            for (int n = 2; n <= config.max_vertices; ++n) {
                Instance inst;
                inst.kind = Instance::Kind::complete;
                inst.n = n;
                inst.id = "completes/" + pad(n);
                out.push_back(std::move(inst));
            }
            break;
        }
        case Family::fans: {
            auto specs = detail::enumerate_fan_specs(config.max_vertices);
            for (std::size_t i = 0; i < specs.size(); ++i) {
                Instance inst;
                inst.kind = Instance::Kind::fan;
                inst.fan_spec = std::move(specs[i]);
                inst.id = "fans/" + pad(static_cast<int>(i) + 1);
                out.push_back(std::move(inst));
            }
            break;
        }
        case Family::circ:
        case Family::star: {
            const bool is_circ = config.family == Family::circ;
            const int want = config.samples > 0 ? config.samples : 100;
            // Candidate sides: fan specs small enough to leave room for the
            // other side, each with at least one usable leaf.
            auto pool_specs = detail::enumerate_fan_specs(config.max_vertices);
            struct Side {
                FanGraphSpec spec;
                std::vector<FanLeaf> leaves;
                int size;
            };
            std::vector<Side> pool;
            for (auto& spec : pool_specs) {
                if (spec.block_count() == 0) continue;
                auto ls = leaf_catalog(spec);
                if (ls.empty()) continue;
                pool.push_back(Side{std::move(spec), std::move(ls),
                                    0});
                pool.back().size = pool.back().spec.realized_vertex_count();
            }
            if (pool.empty()) break;
            SplitMix64 rng(config.seed);
            std::set<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> used;
            const int overlap = is_circ ? 3 : 1;
            std::uint64_t attempts = 0;
            const std::uint64_t max_attempts = static_cast<std::uint64_t>(want) * 4000;
            while (static_cast<int>(out.size()) < want && attempts < max_attempts) {
                ++attempts;
                std::size_t li = rng.below(pool.size());
                std::size_t ri = rng.below(pool.size());
                const Side& l = pool[li];
                const Side& r = pool[ri];
                if (l.size + r.size - overlap > config.max_vertices) continue;
                std::size_t lf = rng.below(l.leaves.size());
                std::size_t rf = rng.below(r.leaves.size());
                if (!used.insert({li, lf, ri, rf}).second) continue;
                Instance inst;
                inst.kind = Instance::Kind::composite;
                inst.composite.op = is_circ ? GlueOp::circ : GlueOp::star;
                inst.composite.left = CompositeSide{l.spec, l.leaves[lf].leaf};
                inst.composite.right = CompositeSide{r.spec, r.leaves[rf].leaf};
                inst.id = std::string(is_circ ? "circ/" : "star/") +
                          pad(static_cast<int>(out.size()) + 1);
                out.push_back(std::move(inst));
            }
            break;
        }
    }

    if (config.samples > 0 && config.family != Family::circ &&
        config.family != Family::star &&
        static_cast<int>(out.size()) > config.samples) {
        // Deterministic down-sampling: pick distinct indices, keep stream order.
        SplitMix64 rng(config.seed);
        std::set<std::size_t> keep;
        while (static_cast<int>(keep.size()) < config.samples)
            keep.insert(static_cast<std::size_t>(rng.below(out.size())));
        std::vector<Instance> subset;
        for (std::size_t idx : keep) subset.push_back(std::move(out[idx]));
        out = std::move(subset);
    }
    return out;
}

}  // namespace fanreg
