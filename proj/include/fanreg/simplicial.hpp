#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/ideal.hpp"
#include "fanreg/linalg.hpp"

namespace fanreg {

/// Simplicial complex given by its facets.  Two degenerate states are kept
/// distinct: the void complex (no faces at all, empty facet list) and the
/// irrelevant complex (single empty facet).
struct SimplicialComplex {
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> facets;

    bool is_void() const { return facets.empty(); }
    bool is_irrelevant() const { return facets.size() == 1 && facets[0].empty(); }

    /// Largest face cardinality; -1 for the void complex.
    int max_face_size() const {
        int best = is_void() ? -1 : 0;
        for (const auto& f : facets) best = std::max(best, static_cast<int>(f.size()));
        return best;
    }

    int dimension() const { return max_face_size() - 1; }
};

namespace detail {

constexpr int kMaxComplexVertices = 20;

/// Boundary-matrix homology over a face list given as bitmasks.  The list
/// must be closed under subsets (and contain mask 0 unless empty).  Returns
/// ranks[d + 1] = rank of reduced homology in degree d, d = -1 .. dim.
inline std::vector<int> homology_ranks_from_faces(std::vector<std::uint32_t> faces,
                                                  Field field) {
    if (faces.empty()) return {};
    std::sort(faces.begin(), faces.end());

    int max_size = 0;
    for (std::uint32_t f : faces) max_size = std::max(max_size, std::popcount(f));

    std::vector<std::vector<std::uint32_t>> level(max_size + 1);
    for (std::uint32_t f : faces) level[std::popcount(f)].push_back(f);
    // faces were globally sorted, so each level is sorted too

    auto row_index = [&](int size, std::uint32_t mask) {
        const auto& lv = level[size];
        return static_cast<int>(std::lower_bound(lv.begin(), lv.end(), mask) -
                                lv.begin());
    };

    // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces
    std::vector<int> boundary_rank(max_size + 2, 0);
    for (int s = 1; s <= max_size; ++s) {
        const auto& cols = level[s];
        const auto& rows = level[s - 1];
        if (cols.empty() || rows.empty()) continue;
        IntMatrix m(rows.size(), std::vector<long long>(cols.size(), 0));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::uint32_t face = cols[c];
            int sign = 1;
            std::uint32_t scan = face;
            while (scan) {
                std::uint32_t bit = scan & (~scan + 1);
                scan &= scan - 1;
                m[row_index(s - 1, face ^ bit)][c] = sign;
                sign = -sign;
            }
        }
        boundary_rank[s] = matrix_rank(m, field);
    }

    std::vector<int> ranks(max_size + 1, 0);
    for (int s = 0; s <= max_size; ++s) {
        int h = static_cast<int>(level[s].size()) - boundary_rank[s] - boundary_rank[s + 1];
        ranks[s] = h;  // degree d = s - 1 stored at index s
    }
    return ranks;
}

}  // namespace detail

/// Stanley-Reisner complex of a squarefree monomial ideal: faces are the
/// variable subsets containing no generator.  For an edge ideal this is the
/// independence complex of the graph.
inline SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal) {
    const int n = ideal.variable_count();
    if (n > detail::kMaxComplexVertices)
        throw capacity_error("Stanley-Reisner sweep over " + std::to_string(n) +
                             " variables exceeds the limit of " +
                             std::to_string(detail::kMaxComplexVertices));
    SimplicialComplex out;
    out.vertices = ideal.variables();
    if (ideal.is_zero()) {
        out.facets.push_back(ideal.variables());
        return out;
    }
    std::vector<std::uint32_t> gens;
    for (const auto& g : ideal.generators()) {
        std::uint32_t mask = 0;
        for (Vertex v : g) {
            int idx = static_cast<int>(std::lower_bound(out.vertices.begin(),
                                                        out.vertices.end(), v) -
                                       out.vertices.begin());
            mask |= std::uint32_t(1) << idx;
        }
        gens.push_back(mask);
    }
    const std::uint32_t full = n == 0 ? 0 : (std::uint32_t(1) << n) - 1;
    std::vector<bool> is_face(std::size_t(1) << n, false);
    for (std::uint32_t s = 0;; ++s) {
        bool face = true;
        for (std::uint32_t g : gens)
            if ((s & g) == g) {
                face = false;
                break;
            }
        is_face[s] = face;
        if (s == full) break;
    }
    for (std::uint32_t s = 0;; ++s) {
        if (is_face[s]) {
            bool maximal = true;
            for (int v = 0; v < n; ++v) {
                std::uint32_t bit = std::uint32_t(1) << v;
                if (!(s & bit) && is_face[s | bit]) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                std::vector<Vertex> facet;
                for (int v = 0; v < n; ++v)
                    if ((s >> v) & 1) facet.push_back(out.vertices[v]);
                out.facets.push_back(std::move(facet));
            }
        }
        if (s == full) break;
    }
    return out;
}

/// Reduced homology ranks of a complex in every degree -1 .. dim, computed
/// from boundary-matrix ranks over the chosen field.  The irrelevant
/// complex has rank 1 in degree -1; the void complex has no degrees at all.
inline std::map<int, int> reduced_homology_ranks(const SimplicialComplex& c, Field field) {
    std::map<int, int> out;
    if (c.is_void()) return out;
    if (static_cast<int>(c.vertices.size()) > detail::kMaxComplexVertices)
        throw capacity_error("homology over " + std::to_string(c.vertices.size()) +
                             " vertices exceeds the limit of " +
                             std::to_string(detail::kMaxComplexVertices));

    std::vector<Vertex> ground = c.vertices;
    std::sort(ground.begin(), ground.end());
    auto bit_of = [&](Vertex v) {
        return static_cast<int>(std::lower_bound(ground.begin(), ground.end(), v) -
                                ground.begin());
    };

    // Expand facets to the full (deduplicated) face list.
    std::vector<std::uint32_t> faces;
    std::vector<bool> seen(std::size_t(1) << ground.size(), false);
    for (const auto& facet : c.facets) {
        std::uint32_t mask = 0;
        for (Vertex v : facet) mask |= std::uint32_t(1) << bit_of(v);
        // subsets of this facet
        std::uint32_t sub = mask;
        for (;;) {
            if (!seen[sub]) {
                seen[sub] = true;
                faces.push_back(sub);
            }
            if (sub == 0) break;
            sub = (sub - 1) & mask;
        }
    }

    auto ranks = detail::homology_ranks_from_faces(std::move(faces), field);
    for (int s = 0; s < static_cast<int>(ranks.size()); ++s) out[s - 1] = ranks[s];
    return out;
}

}  // namespace fanreg
