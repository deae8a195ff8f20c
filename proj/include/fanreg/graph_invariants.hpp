#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/graph.hpp"

namespace fanreg {

namespace detail {

/// Contiguous 0-based view of a graph with bitmask adjacency (<= 64 vertices).
struct IndexedGraph {
    std::vector<Vertex> labels;                  // index -> label
    std::vector<std::uint64_t> adjacency;        // index -> neighbor mask
    std::vector<std::pair<int, int>> edges;      // index pairs, u < v

    explicit IndexedGraph(const SimpleGraph& g) {
        if (g.vertex_count() > 64)
            throw capacity_error("graph has " + std::to_string(g.vertex_count()) +
                                 " vertices; exact search is limited to 64");
        labels = g.vertices();
        std::unordered_map<Vertex, int> pos;
        for (int i = 0; i < static_cast<int>(labels.size()); ++i) pos[labels[i]] = i;
        adjacency.assign(labels.size(), 0);
        for (const Edge& e : g.edges()) {
            int u = pos[e.first], v = pos[e.second];
            adjacency[u] |= std::uint64_t(1) << v;
            adjacency[v] |= std::uint64_t(1) << u;
            edges.push_back({u, v});
        }
    }

    int size() const { return static_cast<int>(labels.size()); }
};

}  // namespace detail

/// Chordality via maximum cardinality search.  The elimination ordering MCS
/// produces is then verified explicitly, so a "true" answer is certified
/// rather than trusted from the search heuristic.
inline bool is_chordal(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n <= 3) return true;
    detail::IndexedGraph ig(g);

    // MCS: repeatedly pick an unvisited vertex with the most visited
    // neighbors (ties -> smallest label).  First visited ends up last in the
    // elimination ordering.
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<int> visit_order;
    visit_order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited[v]) continue;
            if (best < 0 || weight[v] > weight[best]) best = v;
        }
        visited[best] = true;
        visit_order.push_back(best);
        for (int u = 0; u < n; ++u)
            if (!visited[u] && (ig.adjacency[best] >> u) & 1) ++weight[u];
    }
    std::vector<int> elim(visit_order.rbegin(), visit_order.rend());

    // Zero fill-in test: for each vertex, its earliest later neighbor must
    // dominate the remaining later neighbors.
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[elim[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = elim[i];
        int parent = -1;
        std::uint64_t later = 0;
        std::uint64_t nbrs = ig.adjacency[v];
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (position[u] > i) {
                later |= std::uint64_t(1) << u;
                if (parent < 0 || position[u] < position[parent]) parent = u;
            }
        }
        if (parent < 0) continue;
        later &= ~(std::uint64_t(1) << parent);
        if ((later & ~ig.adjacency[parent]) != 0) return false;
    }
    return true;
}

/// Exact induced matching number.  Exhaustive search with pruning; intended
/// as an oracle for graphs of desk scale, not a production solver.
inline int induced_matching_number(const SimpleGraph& g) {
    detail::IndexedGraph ig(g);
    const int m = static_cast<int>(ig.edges.size());
    if (m == 0) return 0;

    // For each edge, the vertices its choice blocks: N[u] | N[v].
    std::vector<std::uint64_t> edge_mask(m), blocked_mask(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = ig.edges[e];
        edge_mask[e] = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
        blocked_mask[e] = ig.adjacency[u] | ig.adjacency[v] | edge_mask[e];
    }

    int best = 0;
    auto search = [&](auto&& self, int from, std::uint64_t blocked, int count) -> void {
        if (count > best) best = count;
        // Cheap bound: every further edge uses two fresh vertices.
        int free_vertices = ig.size() - std::popcount(blocked);
        if (count + free_vertices / 2 <= best) return;
        for (int e = from; e < m; ++e) {
            if (edge_mask[e] & blocked) continue;
            self(self, e + 1, blocked | blocked_mask[e], count + 1);
        }
    };
    search(search, 0, 0, 0);
    return best;
}

/// Exact minimum vertex cover size by branch and bound on uncovered edges.
inline int min_vertex_cover_size(const SimpleGraph& g) {
    detail::IndexedGraph ig(g);
    const int m = static_cast<int>(ig.edges.size());
    if (m == 0) return 0;
    int best = ig.size();

    auto search = [&](auto&& self, std::uint64_t cover, int count) -> void {
        if (count >= best) return;
        int open = -1;
        for (int e = 0; e < m; ++e) {
            auto [u, v] = ig.edges[e];
            if (!((cover >> u) & 1) && !((cover >> v) & 1)) {
                open = e;
                break;
            }
        }
        if (open < 0) {
            best = count;
            return;
        }
        auto [u, v] = ig.edges[open];
        self(self, cover | (std::uint64_t(1) << u), count + 1);
        self(self, cover | (std::uint64_t(1) << v), count + 1);
    };
    search(search, 0, 0);
    return best;
}

/// Exact maximum independent set size; independent of the cover search so
/// the two can cross-check each other.
inline int max_independent_set_size(const SimpleGraph& g) {
    detail::IndexedGraph ig(g);
    const int n = ig.size();
    if (n == 0) return 0;
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    int best = 0;

    auto search = [&](auto&& self, std::uint64_t avail, int count) -> void {
        if (count > best) best = count;
        if (count + std::popcount(avail) <= best) return;
        if (!avail) return;
        // Branch on a vertex of maximum degree within the available set.
        int pick = -1, pick_deg = -1;
        std::uint64_t scan = avail;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(ig.adjacency[v] & avail);
            if (d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        }
        std::uint64_t bit = std::uint64_t(1) << pick;
        if (pick_deg == 0) {
            // Remaining available vertices are pairwise nonadjacent only if
            // all degrees are zero; take them all.
            self(self, 0, count + std::popcount(avail));
            return;
        }
        self(self, avail & ~(ig.adjacency[pick] | bit), count + 1);  // take pick
        self(self, avail & ~bit, count);                             // skip pick
    };
    search(search, all, 0);
    return best;
}

}  // namespace fanreg
