#pragma once

#include <string>
#include <vector>

#include "fanreg/errors.hpp"
#include "fanreg/fan.hpp"
#include "fanreg/graph.hpp"

namespace fanreg {

enum class GlueOp { circ, star };

inline const char* to_string(GlueOp op) { return op == GlueOp::circ ? "circ" : "star"; }

struct GluedGraph {
    SimpleGraph graph;
    /// Labels of the right operand were shifted by this amount (before any
    /// identification).
    Vertex right_shift;
    /// The identified vertex: the surviving neighbor for circ, the merged
    /// leaf for star.  Always carries the left-side label.
    Vertex joint;
};

namespace detail {

inline Vertex require_leaf(const SimpleGraph& g, Vertex f) {
    g.require_vertex(f);
    if (g.degree(f) != 1)
        throw validation_error("vertex " + std::to_string(f) + " is not a leaf (degree " +
                               std::to_string(g.degree(f)) + ")");
    return g.neighbors(f)[0];
}

}  // namespace detail

/// circ: delete the two leaves, then identify their neighbors.  The right
/// graph is relabeled by max(left)+1 and the identified vertex keeps the
/// left label, so the result is reproducible.
inline GluedGraph circ_glue(const SimpleGraph& g1, Vertex f1, const SimpleGraph& g2,
                            Vertex f2) {
    Vertex v1 = detail::require_leaf(g1, f1);
    Vertex v2 = detail::require_leaf(g2, f2);
    if (g1.degree(v1) < 2)
        throw validation_error("neighbor " + std::to_string(v1) + " of leaf " +
                               std::to_string(f1) +
                               " has degree 1; circ requires a neighbor of degree >= 2");
    if (g2.degree(v2) < 2)
        throw validation_error("neighbor " + std::to_string(v2) + " of leaf " +
                               std::to_string(f2) +
                               " has degree 1; circ requires a neighbor of degree >= 2");

    Vertex shift = g1.max_label() + 1;
    auto remap = [&](Vertex v) { return v == v2 ? v1 : v + shift; };

    std::vector<Vertex> vs;
    for (Vertex v : g1.vertices())
        if (v != f1) vs.push_back(v);
    for (Vertex v : g2.vertices())
        if (v != f2 && v != v2) vs.push_back(v + shift);
    std::vector<Edge> es;
    for (const Edge& e : g1.edges())
        if (e.first != f1 && e.second != f1) es.push_back(e);
    for (const Edge& e : g2.edges())
        if (e.first != f2 && e.second != f2) es.push_back({remap(e.first), remap(e.second)});
    return GluedGraph{SimpleGraph(std::move(vs), es), shift, v1};
}

/// star: identify the two leaves into one vertex carrying the left label.
inline GluedGraph star_glue(const SimpleGraph& g1, Vertex f1, const SimpleGraph& g2,
                            Vertex f2) {
    detail::require_leaf(g1, f1);
    detail::require_leaf(g2, f2);

    Vertex shift = g1.max_label() + 1;
    auto remap = [&](Vertex v) { return v == f2 ? f1 : v + shift; };

    std::vector<Vertex> vs = g1.vertices();
    for (Vertex v : g2.vertices())
        if (v != f2) vs.push_back(v + shift);
    std::vector<Edge> es = g1.edges();
    for (const Edge& e : g2.edges()) es.push_back({remap(e.first), remap(e.second)});
    return GluedGraph{SimpleGraph(std::move(vs), es), shift, f1};
}

/// One side of a composition: a fan spec plus the designated leaf label in
/// its realization.
struct CompositeSide {
    FanGraphSpec spec;
    Vertex leaf = 0;
};

struct CompositeSpec {
    GlueOp op = GlueOp::circ;
    CompositeSide left;
    CompositeSide right;
};

struct CompositeRealization {
    SimpleGraph graph;
    FanRealization left;
    FanRealization right;
    Vertex right_shift = 0;
    Vertex joint = 0;
};

inline CompositeRealization realize(const CompositeSpec& c) {
    CompositeRealization out;
    out.left = realize(c.left.spec);
    out.right = realize(c.right.spec);
    GluedGraph glued = c.op == GlueOp::circ
                           ? circ_glue(out.left.graph, c.left.leaf, out.right.graph,
                                       c.right.leaf)
                           : star_glue(out.left.graph, c.left.leaf, out.right.graph,
                                       c.right.leaf);
    out.graph = std::move(glued.graph);
    out.right_shift = glued.right_shift;
    out.joint = glued.joint;
    return out;
}

}  // namespace fanreg
