#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/graph.hpp"

namespace fanreg {

/// One fan: an ordered attach set (w_1,...,w_r) inside the base clique and
/// the branch clique sizes (a_1,...,a_r).  The j-th branch clique K_{a_j}
/// meets the base exactly in {w_1,...,w_j}, so it contributes a_j - j fresh
/// vertices; that excess h_j = a_j - j is required to be >= 1.
struct FanBlock {
    std::vector<Vertex> vertices;
    std::vector<int> branch_sizes;

    int size() const { return static_cast<int>(vertices.size()); }
    int excess(int position) const { return branch_sizes[position] - (position + 1); }
};

/// A k-fan graph of K_n: base clique on 1..n plus one fan per block.
/// k = 0 (no blocks) is legal and denotes the bare complete graph.
struct FanGraphSpec {
    int base_size = 0;
    std::vector<FanBlock> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    int attach_size() const {
        int total = 0;
        for (const FanBlock& b : blocks) total += b.size();
        return total;
    }

    bool attach_covers_base() const { return attach_size() == base_size; }

    int max_block_size() const {
        int best = 0;
        for (const FanBlock& b : blocks) best = std::max(best, b.size());
        return best;
    }

    int realized_vertex_count() const {
        int total = base_size;
        for (const FanBlock& b : blocks)
            for (int j = 0; j < b.size(); ++j) total += b.excess(j);
        return total;
    }

    /// Count of branch positions with excess >= 2 across all blocks.
    int high_excess_count() const {
        int p = 0;
        for (const FanBlock& b : blocks)
            for (int j = 0; j < b.size(); ++j)
                if (b.excess(j) >= 2) ++p;
        return p;
    }

    void validate() const {
        if (base_size < 2)
            throw validation_error("base clique size must be at least 2, got " +
                                   std::to_string(base_size));
        std::set<Vertex> used;
        for (int i = 0; i < block_count(); ++i) {
            const FanBlock& b = blocks[i];
            const std::string where = "block " + std::to_string(i + 1);
            if (b.vertices.empty())
                throw validation_error(where + ": vertex list is empty");
            if (b.branch_sizes.size() != b.vertices.size())
                throw validation_error(where + ": expected " +
                                       std::to_string(b.vertices.size()) +
                                       " branch sizes, got " +
                                       std::to_string(b.branch_sizes.size()));
            for (Vertex v : b.vertices) {
                if (v < 1 || v > base_size)
                    throw validation_error(where + ": vertex " + std::to_string(v) +
                                           " is outside the base range [1, " +
                                           std::to_string(base_size) + "]");
                if (!used.insert(v).second)
                    throw validation_error(where + ": vertex " + std::to_string(v) +
                                           " appears in more than one block position");
            }
            for (int j = 0; j < b.size(); ++j) {
                if (b.branch_sizes[j] <= j + 1)
                    throw validation_error(where + ", position " + std::to_string(j + 1) +
                                           ": branch size " +
                                           std::to_string(b.branch_sizes[j]) +
                                           " must exceed the position");
            }
        }
    }

    bool operator==(const FanGraphSpec& other) const {
        if (base_size != other.base_size || blocks.size() != other.blocks.size())
            return false;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].vertices != other.blocks[i].vertices ||
                blocks[i].branch_sizes != other.blocks[i].branch_sizes)
                return false;
        return true;
    }
};

struct FanRealization {
    SimpleGraph graph;
    /// branch_vertices[block][position] holds the fresh labels of that
    /// branch clique, in allocation order.
    std::vector<std::vector<std::vector<Vertex>>> branch_vertices;
};

/// Build the fan graph.  Base clique sits on 1..n; fresh labels are handed
/// out consecutively from n+1 in (block, position, local) order, so equal
/// specs always realize to equal graphs.
inline FanRealization realize(const FanGraphSpec& spec) {
    spec.validate();
    const int n = spec.base_size;
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int v = 1; v <= n; ++v) vs.push_back(v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) es.push_back({u, v});

    FanRealization out;
    out.branch_vertices.resize(spec.blocks.size());
    Vertex next = n + 1;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
        const FanBlock& b = spec.blocks[i];
        out.branch_vertices[i].resize(b.size());
        for (int j = 0; j < b.size(); ++j) {
            std::vector<Vertex> clique(b.vertices.begin(), b.vertices.begin() + j + 1);
            for (int local = 0; local < b.excess(j); ++local) {
                out.branch_vertices[i][j].push_back(next);
                clique.push_back(next);
                vs.push_back(next);
                ++next;
            }
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t c = a + 1; c < clique.size(); ++c)
                    es.push_back({clique[a], clique[c]});
        }
    }
    out.graph = SimpleGraph(std::move(vs), es);
    return out;
}

/// A degree-1 branch vertex whose neighbor lies in the attach set.  These
/// are exactly the position-1 branches of size 2 (K_2 hanging off w_{i,1}).
struct FanLeaf {
    Vertex leaf;
    Vertex neighbor;
    int block;  // 0-based index into spec.blocks
};

inline std::vector<FanLeaf> leaf_catalog(const FanGraphSpec& spec) {
    spec.validate();
    std::vector<FanLeaf> out;
    Vertex next = spec.base_size + 1;
    for (int i = 0; i < spec.block_count(); ++i) {
        const FanBlock& b = spec.blocks[i];
        if (b.branch_sizes[0] == 2)
            out.push_back(FanLeaf{next, b.vertices[0], i});
        for (int j = 0; j < b.size(); ++j) next += b.excess(j);
    }
    return out;
}

/// Block statistics entering the composition theorems, computed with the
/// leaf's block re-indexed to the front (the theorems put v_i in W_{i,1};
/// the spec itself is never mutated).
struct TheoremQuantities {
    int T = 0;            // max block size
    int T_prime = 0;      // max of (leaf block size - 1) and the other block sizes
    int p = 0;            // number of branch positions with excess >= 2
    int attach_size = 0;  // |W|
    int base_size = 0;    // n
    int leaf_block = 0;   // original index of the block containing the leaf's neighbor
    std::vector<std::vector<int>> block_excess;  // h-lists, leaf block first
};

inline TheoremQuantities theorem_quantities(const FanGraphSpec& spec, Vertex leaf) {
    auto catalog = leaf_catalog(spec);
    const FanLeaf* found = nullptr;
    for (const FanLeaf& l : catalog)
        if (l.leaf == leaf) found = &l;
    if (!found)
        throw validation_error("vertex " + std::to_string(leaf) +
                               " is not a fan leaf with neighbor in the attach set");

    TheoremQuantities q;
    q.base_size = spec.base_size;
    q.attach_size = spec.attach_size();
    q.p = spec.high_excess_count();
    q.leaf_block = found->block;
    q.T = spec.max_block_size();
    q.T_prime = spec.blocks[found->block].size() - 1;
    for (int i = 0; i < spec.block_count(); ++i)
        if (i != found->block) q.T_prime = std::max(q.T_prime, spec.blocks[i].size());

    auto excess_list = [](const FanBlock& b) {
        std::vector<int> h;
        for (int j = 0; j < b.size(); ++j) h.push_back(b.excess(j));
        return h;
    };
    q.block_excess.push_back(excess_list(spec.blocks[found->block]));
    for (int i = 0; i < spec.block_count(); ++i)
        if (i != found->block) q.block_excess.push_back(excess_list(spec.blocks[i]));
    return q;
}

}  // namespace fanreg
