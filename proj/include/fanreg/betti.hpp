#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/ideal.hpp"
#include "fanreg/linalg.hpp"
#include "fanreg/report.hpp"
#include "fanreg/simplicial.hpp"

namespace fanreg {

constexpr int kMaxHochsterVariables = 16;
constexpr int kMaxTaylorGenerators = 12;

/// Graded Betti numbers of a quotient S/I; only nonzero entries are stored.
/// depth is read off through the Auslander-Buchsbaum identity
/// depth = n - pd, reg as max(j - i).
struct BettiTable {
    int variable_count = 0;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    int projective_dimension() const {
        int pd = 0;
        for (const auto& [key, beta] : entries)
            if (beta > 0) pd = std::max(pd, key.first);
        return pd;
    }

    int depth() const { return variable_count - projective_dimension(); }

    int regularity() const {
        int reg = 0;
        for (const auto& [key, beta] : entries)
            if (beta > 0) reg = std::max(reg, key.second - key.first);
        return reg;
    }

    bool operator==(const BettiTable& other) const {
        return variable_count == other.variable_count && entries == other.entries;
    }
};

namespace detail {

inline std::vector<std::uint32_t> generator_masks(const SquarefreeMonomialIdeal& ideal) {
    const auto& vars = ideal.variables();
    std::vector<std::uint32_t> masks;
    for (const auto& g : ideal.generators()) {
        std::uint32_t m = 0;
        for (Vertex v : g)
            m |= std::uint32_t(1)
                 << (std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
        masks.push_back(m);
    }
    return masks;
}

/// All faces of the Stanley-Reisner complex restricted to sigma, i.e. the
/// subsets of sigma containing no generator.
inline std::vector<std::uint32_t> restricted_faces(
    std::uint32_t sigma, const std::vector<std::vector<std::uint32_t>>& gens_with) {
    std::vector<int> bits;
    for (std::uint32_t scan = sigma; scan;) {
        bits.push_back(std::countr_zero(scan));
        scan &= scan - 1;
    }
    std::vector<std::uint32_t> faces;
    auto grow = [&](auto&& self, std::size_t pos, std::uint32_t cur) -> void {
        if (pos == bits.size()) {
            faces.push_back(cur);
            return;
        }
        self(self, pos + 1, cur);
        std::uint32_t next = cur | (std::uint32_t(1) << bits[pos]);
        for (std::uint32_t g : gens_with[bits[pos]])
            if ((next & g) == g) return;  // adding this vertex completes a generator
        self(self, pos + 1, next);
    };
    grow(grow, 0, 0);
    return faces;
}

}  // namespace detail

/// Betti table by Hochster's formula: beta_{i,j}(S/I) collects the reduced
/// homology ranks, in degree |sigma| - i - 1, of the Stanley-Reisner
/// complex restricted to each vertex subset sigma with |sigma| = j.
inline BettiTable betti_table_hochster(const SquarefreeMonomialIdeal& ideal, Field field) {
    const int n = ideal.variable_count();
    if (n > kMaxHochsterVariables)
        throw capacity_error("Hochster sweep over " + std::to_string(n) +
                             " variables exceeds the limit of " +
                             std::to_string(kMaxHochsterVariables));

    auto gens = detail::generator_masks(ideal);
    std::vector<std::vector<std::uint32_t>> gens_with(n);
    for (std::uint32_t g : gens)
        for (std::uint32_t scan = g; scan;) {
            gens_with[std::countr_zero(scan)].push_back(g);
            scan &= scan - 1;
        }

    BettiTable table;
    table.variable_count = n;
    const std::uint32_t full = n == 0 ? 0 : (std::uint32_t(1) << n) - 1;
    for (std::uint32_t sigma = 0;; ++sigma) {
        // A vertex of sigma lying in no generator inside sigma makes the
        // restriction a cone: no reduced homology, skip.
        bool cone = false;
        for (std::uint32_t scan = sigma; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            bool hit = false;
            for (std::uint32_t g : gens_with[v])
                if ((g & sigma) == g) {
                    hit = true;
                    break;
                }
            if (!hit) {
                cone = true;
                break;
            }
        }
        if (!cone) {
            auto ranks = detail::homology_ranks_from_faces(
                detail::restricted_faces(sigma, gens_with), field);
            const int j = std::popcount(sigma);
            for (int s = 0; s < static_cast<int>(ranks.size()); ++s) {
                if (ranks[s] <= 0) continue;
                const int d = s - 1;
                table.entries[{j - 1 - d, j}] += ranks[s];
            }
        }
        if (sigma == full) break;
    }
    return table;
}

/// Betti table from the Taylor complex: the resolution indexed by subsets
/// of generators, specialized at the variables, has homology exactly
/// Tor(S/I, K).  Entirely independent of the Hochster route.
inline BettiTable betti_table_taylor(const SquarefreeMonomialIdeal& ideal, Field field) {
    const int r = ideal.generator_count();
    if (r > kMaxTaylorGenerators)
        throw capacity_error("Taylor sweep over " + std::to_string(r) +
                             " generators exceeds the limit of " +
                             std::to_string(kMaxTaylorGenerators));

    BettiTable table;
    table.variable_count = ideal.variable_count();
    auto gens = detail::generator_masks(ideal);

    const std::uint32_t subsets = std::uint32_t(1) << r;
    std::vector<std::uint32_t> lcm(subsets, 0);
    for (std::uint32_t a = 1; a < subsets; ++a) {
        std::uint32_t low = a & (~a + 1);
        lcm[a] = lcm[a ^ low] | gens[std::countr_zero(low)];
    }

    // Group generator subsets by (homological degree i, internal degree j).
    std::map<std::pair<int, int>, std::vector<std::uint32_t>> groups;
    for (std::uint32_t a = 0; a < subsets; ++a)
        groups[{std::popcount(a), std::popcount(lcm[a])}].push_back(a);

    auto group_of = [&](int i, int j) -> const std::vector<std::uint32_t>* {
        auto it = groups.find({i, j});
        return it == groups.end() ? nullptr : &it->second;
    };

    // rank of the specialized differential from (i, j) into (i-1, j):
    // dropping a generator keeps the coefficient nonzero only when the lcm
    // is unchanged.
    std::map<std::pair<int, int>, int> diff_rank;
    for (const auto& [key, cols] : groups) {
        auto [i, j] = key;
        if (i == 0) continue;
        const auto* rows = group_of(i - 1, j);
        if (!rows) continue;
        IntMatrix m(rows->size(), std::vector<long long>(cols.size(), 0));
        bool nonzero = false;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::uint32_t a = cols[c];
            int sign = 1;
            for (std::uint32_t scan = a; scan;) {
                std::uint32_t bit = scan & (~scan + 1);
                scan &= scan - 1;
                std::uint32_t b = a ^ bit;
                if (lcm[b] == lcm[a]) {
                    int row = static_cast<int>(
                        std::lower_bound(rows->begin(), rows->end(), b) - rows->begin());
                    m[row][c] = sign;
                    nonzero = true;
                }
                sign = -sign;
            }
        }
        if (nonzero) diff_rank[key] = matrix_rank(m, field);
    }

    for (const auto& [key, members] : groups) {
        auto [i, j] = key;
        auto rank_at = [&](int ii, int jj) {
            auto it = diff_rank.find({ii, jj});
            return it == diff_rank.end() ? 0 : it->second;
        };
        long long beta = static_cast<long long>(members.size()) - rank_at(i, j) -
                         rank_at(i + 1, j);
        if (beta > 0) table.entries[{i, j}] += beta;
    }
    return table;
}

namespace detail {

/// Minimum transversal of the generator hypergraph (smallest variable set
/// meeting every generator); dimension route independent of the facet scan.
inline int min_generator_transversal(const SquarefreeMonomialIdeal& ideal) {
    auto gens = generator_masks(ideal);
    const int m = static_cast<int>(gens.size());
    if (m == 0) return 0;
    int best = ideal.variable_count();
    auto search = [&](auto&& self, std::uint32_t chosen, int count) -> void {
        if (count >= best) return;
        int open = -1;
        for (int g = 0; g < m; ++g)
            if ((gens[g] & chosen) == 0) {
                open = g;
                break;
            }
        if (open < 0) {
            best = count;
            return;
        }
        for (std::uint32_t scan = gens[open]; scan;) {
            std::uint32_t bit = scan & (~scan + 1);
            scan &= scan - 1;
            self(self, chosen | bit, count + 1);
        }
    };
    search(search, 0, 0);
    return best;
}

}  // namespace detail

/// Ground-truth invariants of S/I.  Dimension is computed along two
/// independent routes (largest Stanley-Reisner face; variables minus the
/// minimum generator transversal) and cross-asserted.
inline InvariantReport oracle_invariants(const SquarefreeMonomialIdeal& ideal, Field field) {
    const int n = ideal.variable_count();
    if (n > kMaxHochsterVariables)
        throw capacity_error("oracle over " + std::to_string(n) +
                             " variables exceeds the limit of " +
                             std::to_string(kMaxHochsterVariables));

    const int dim_faces = stanley_reisner_complex(ideal).max_face_size();
    const int dim_cover = n - detail::min_generator_transversal(ideal);
    if (dim_faces != dim_cover)
        throw std::logic_error("dimension routes disagree: faces " +
                               std::to_string(dim_faces) + " vs cover " +
                               std::to_string(dim_cover));

    BettiTable table = betti_table_hochster(ideal, field);
    InvariantReport r;
    r.method = Method::oracle;
    r.dim = dim_faces;
    r.depth = table.depth();
    r.reg = table.regularity();
    return r;
}

}  // namespace fanreg
