#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/graph.hpp"

namespace fanreg {

/// Squarefree monomial ideal over a fixed variable set: each generator is a
/// vertex subset.  Construction minimalizes, so the stored generators are
/// always the unique minimal generating set, pairwise incomparable under
/// inclusion.  No generators at all is the zero ideal.
class SquarefreeMonomialIdeal {
public:
    SquarefreeMonomialIdeal() = default;

    SquarefreeMonomialIdeal(std::vector<Vertex> variables,
                            std::vector<std::vector<Vertex>> generators) {
        std::sort(variables.begin(), variables.end());
        variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
        variables_ = std::move(variables);
        for (auto& g : generators) {
            if (g.empty()) throw validation_error("empty generator (unit monomial)");
            std::sort(g.begin(), g.end());
            g.erase(std::unique(g.begin(), g.end()), g.end());
            for (Vertex v : g)
                if (!std::binary_search(variables_.begin(), variables_.end(), v))
                    throw validation_error("generator uses unknown variable " +
                                           std::to_string(v));
        }
        generators_ = minimalize(std::move(generators));
    }

    static SquarefreeMonomialIdeal zero(std::vector<Vertex> variables) {
        return SquarefreeMonomialIdeal(std::move(variables), {});
    }

    const std::vector<Vertex>& variables() const { return variables_; }
    const std::vector<std::vector<Vertex>>& generators() const { return generators_; }
    int variable_count() const { return static_cast<int>(variables_.size()); }
    int generator_count() const { return static_cast<int>(generators_.size()); }
    bool is_zero() const { return generators_.empty(); }

    bool operator==(const SquarefreeMonomialIdeal& other) const {
        return variables_ == other.variables_ && generators_ == other.generators_;
    }
    bool operator!=(const SquarefreeMonomialIdeal& other) const {
        return !(*this == other);
    }

private:
    static std::vector<std::vector<Vertex>> minimalize(
        std::vector<std::vector<Vertex>> gens) {
        std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<std::vector<Vertex>> kept;
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& k : kept) {
                if (std::includes(g.begin(), g.end(), k.begin(), k.end())) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(g);
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    std::vector<Vertex> variables_;
    std::vector<std::vector<Vertex>> generators_;
};

/// I_G: one degree-2 generator per edge, over the graph's vertex set.  An
/// edgeless graph yields the zero ideal.
inline SquarefreeMonomialIdeal edge_ideal(const SimpleGraph& g) {
    std::vector<std::vector<Vertex>> gens;
    for (const Edge& e : g.edges()) gens.push_back({e.first, e.second});
    return SquarefreeMonomialIdeal(g.vertices(), std::move(gens));
}

inline void require_same_variables(const SquarefreeMonomialIdeal& a,
                                   const SquarefreeMonomialIdeal& b) {
    if (a.variables() != b.variables())
        throw validation_error("ideals live over different variable sets");
}

/// J + K: union of generators, re-minimalized.
inline SquarefreeMonomialIdeal ideal_sum(const SquarefreeMonomialIdeal& a,
                                         const SquarefreeMonomialIdeal& b) {
    require_same_variables(a, b);
    std::vector<std::vector<Vertex>> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return SquarefreeMonomialIdeal(a.variables(), std::move(gens));
}

/// J ∩ K: pairwise lcms (set unions for squarefree monomials), minimalized.
inline SquarefreeMonomialIdeal ideal_intersect(const SquarefreeMonomialIdeal& a,
                                               const SquarefreeMonomialIdeal& b) {
    require_same_variables(a, b);
    std::vector<std::vector<Vertex>> gens;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators()) {
            std::vector<Vertex> u;
            std::set_union(ga.begin(), ga.end(), gb.begin(), gb.end(),
                           std::back_inserter(u));
            gens.push_back(std::move(u));
        }
    return SquarefreeMonomialIdeal(a.variables(), std::move(gens));
}

struct VertexDecomposition {
    SquarefreeMonomialIdeal J;  // (x_{N(v)}) + I_{G \ N[v]}
    SquarefreeMonomialIdeal K;  // (x_v) + I_{G \ v}
};

/// The splitting I_G = J ∩ K at a vertex, both ideals presented over the
/// full variable set of g.
inline VertexDecomposition decompose_at_vertex(const SimpleGraph& g, Vertex v) {
    g.require_vertex(v);
    const std::vector<Vertex> vars = g.vertices();

    std::vector<std::vector<Vertex>> j_gens;
    for (Vertex u : g.neighbors(v)) j_gens.push_back({u});
    SimpleGraph far = remove_vertices(g, closed_neighborhood(g, v));
    for (const Edge& e : far.edges()) j_gens.push_back({e.first, e.second});

    std::vector<std::vector<Vertex>> k_gens;
    k_gens.push_back({v});
    SimpleGraph rest = remove_vertex(g, v);
    for (const Edge& e : rest.edges()) k_gens.push_back({e.first, e.second});

    return VertexDecomposition{SquarefreeMonomialIdeal(vars, std::move(j_gens)),
                               SquarefreeMonomialIdeal(vars, std::move(k_gens))};
}

}  // namespace fanreg
