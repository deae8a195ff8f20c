#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fanreg/errors.hpp"

namespace fanreg {

using Vertex = int;

/// Unordered edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex u, Vertex v) {
    if (u == v) throw validation_error("loop edge at vertex " + std::to_string(u));
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple graph with stable integer vertex labels.  Immutable after
/// construction; all graph operations below return new graphs.
class SimpleGraph {
public:
    SimpleGraph() = default;

    SimpleGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        for (Vertex v : vertices) {
            if (v < 0) throw validation_error("negative vertex label " + std::to_string(v));
        }
        vertices_ = std::move(vertices);
        std::set<Edge> seen;
        for (const Edge& e : edges) {
            Edge norm = make_edge(e.first, e.second);
            if (!has_vertex(norm.first))
                throw validation_error("edge endpoint " + std::to_string(norm.first) +
                                       " is not a vertex");
            if (!has_vertex(norm.second))
                throw validation_error("edge endpoint " + std::to_string(norm.second) +
                                       " is not a vertex");
            seen.insert(norm);
        }
        edges_.assign(seen.begin(), seen.end());
        for (const Edge& e : edges_) {
            adjacency_[e.first].push_back(e.second);
            adjacency_[e.second].push_back(e.first);
        }
        for (auto& [v, nbrs] : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    }

    /// K_n on labels 1..n.
    static SimpleGraph complete(int n) {
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int v = 1; v <= n; ++v) vs.push_back(v);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) es.push_back({u, v});
        return SimpleGraph(std::move(vs), es);
    }

    /// P_n on labels 1..n with edges {i, i+1}.
    static SimpleGraph path(int n) {
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (int v = 1; v <= n; ++v) vs.push_back(v);
        for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
        return SimpleGraph(std::move(vs), es);
    }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(Vertex v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u == v) return false;
        Edge e = u < v ? Edge{u, v} : Edge{v, u};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        require_vertex(v);
        auto it = adjacency_.find(v);
        if (it == adjacency_.end()) return empty_neighbors();
        return it->second;
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    Vertex max_label() const { return vertices_.empty() ? -1 : vertices_.back(); }

    bool operator==(const SimpleGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }
    bool operator!=(const SimpleGraph& other) const { return !(*this == other); }

    void require_vertex(Vertex v) const {
        if (!has_vertex(v))
            throw validation_error("unknown vertex " + std::to_string(v));
    }

private:
    static const std::vector<Vertex>& empty_neighbors() {
        static const std::vector<Vertex> none;
        return none;
    }

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::map<Vertex, std::vector<Vertex>> adjacency_;
};

/// N_G(v).
inline std::vector<Vertex> neighborhood(const SimpleGraph& g, Vertex v) {
    return g.neighbors(v);
}

/// N_G[v] = N_G(v) ∪ {v}.
inline std::vector<Vertex> closed_neighborhood(const SimpleGraph& g, Vertex v) {
    std::vector<Vertex> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

/// Induced subgraph on the label set a; labels preserved.
inline SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<Vertex>& a) {
    std::vector<Vertex> offenders;
    for (Vertex v : a)
        if (!g.has_vertex(v)) offenders.push_back(v);
    if (!offenders.empty()) {
        std::string msg = "not vertices of the graph:";
        for (Vertex v : offenders) msg += " " + std::to_string(v);
        throw validation_error(msg);
    }
    std::vector<Vertex> vs(a.begin(), a.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        bool keep_u = std::binary_search(vs.begin(), vs.end(), e.first);
        bool keep_v = std::binary_search(vs.begin(), vs.end(), e.second);
        if (keep_u && keep_v) es.push_back(e);
    }
    return SimpleGraph(std::move(vs), es);
}

/// G \ W: induced subgraph on vertices(g) minus w.
inline SimpleGraph remove_vertices(const SimpleGraph& g, const std::vector<Vertex>& w) {
    std::vector<Vertex> drop(w.begin(), w.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Vertex> offenders;
    for (Vertex v : drop)
        if (!g.has_vertex(v)) offenders.push_back(v);
    if (!offenders.empty()) {
        std::string msg = "not vertices of the graph:";
        for (Vertex v : offenders) msg += " " + std::to_string(v);
        throw validation_error(msg);
    }
    std::vector<Vertex> keep;
    for (Vertex v : g.vertices())
        if (!std::binary_search(drop.begin(), drop.end(), v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline SimpleGraph remove_vertex(const SimpleGraph& g, Vertex v) {
    return remove_vertices(g, {v});
}

/// All vertices of degree exactly 1.
inline std::vector<Vertex> leaves(const SimpleGraph& g) {
    std::vector<Vertex> out;
    for (Vertex v : g.vertices())
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

struct DisjointUnion {
    SimpleGraph graph;
    /// Labels of the second operand were shifted by this amount.
    Vertex shift;
};

/// Vertex-disjoint union; g1 labels preserved, g2 labels shifted by
/// max(g1) + 1.
inline DisjointUnion disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
    Vertex shift = g1.max_label() + 1;
    std::vector<Vertex> vs = g1.vertices();
    for (Vertex v : g2.vertices()) vs.push_back(v + shift);
    std::vector<Edge> es = g1.edges();
    for (const Edge& e : g2.edges()) es.push_back({e.first + shift, e.second + shift});
    return DisjointUnion{SimpleGraph(std::move(vs), es), shift};
}

/// A set of pairwise-disjoint edges of a host graph.
struct Matching {
    std::vector<Edge> edges;

    void validate(const SimpleGraph& host) const {
        for (const Edge& e : edges)
            if (!host.has_edge(e.first, e.second))
                throw validation_error("matching edge {" + std::to_string(e.first) + "," +
                                       std::to_string(e.second) + "} is not a host edge");
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const Edge& a = edges[i];
                const Edge& b = edges[j];
                if (a.first == b.first || a.first == b.second || a.second == b.first ||
                    a.second == b.second)
                    throw validation_error("matching edges share a vertex");
            }
    }

    /// True if the host's induced subgraph on the matched vertices contains
    /// no edges besides the matching itself.
    bool induced_in(const SimpleGraph& host) const {
        std::vector<Vertex> support;
        for (const Edge& e : edges) {
            support.push_back(e.first);
            support.push_back(e.second);
        }
        SimpleGraph sub = induced_subgraph(host, support);
        return sub.edge_count() == static_cast<int>(edges.size());
    }
};

/// Vertex subset meeting every edge of a host graph.
struct VertexCover {
    std::vector<Vertex> vertices;
    bool minimal = false;

    void validate(const SimpleGraph& host) const {
        std::set<Vertex> in(vertices.begin(), vertices.end());
        for (Vertex v : vertices) host.require_vertex(v);
        auto covers = [&](const std::set<Vertex>& c) {
            for (const Edge& e : host.edges())
                if (!c.count(e.first) && !c.count(e.second)) return false;
            return true;
        };
        if (!covers(in)) throw validation_error("vertex set is not a cover");
        if (minimal) {
            for (Vertex v : vertices) {
                std::set<Vertex> smaller = in;
                smaller.erase(v);
                if (covers(smaller))
                    throw validation_error("cover is not minimal: vertex " +
                                           std::to_string(v) + " is redundant");
            }
        }
    }
};

}  // namespace fanreg
