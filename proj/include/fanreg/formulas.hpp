#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "fanreg/compose.hpp"
#include "fanreg/errors.hpp"
#include "fanreg/fan.hpp"
#include "fanreg/graph_invariants.hpp"
#include "fanreg/report.hpp"

namespace fanreg {

/// depth and reg of S/I for the complete graph K_n: both 1.
inline std::pair<int, int> complete_invariants(int n) {
    if (n < 2)
        throw validation_error("complete graph needs n >= 2 (edge ideal is empty), got " +
                               std::to_string(n));
    return {1, 1};
}

/// depth and reg of S/I for the path P_n: (ceil(n/3), floor((n+1)/3)).
inline std::pair<int, int> path_invariants(int n) {
    if (n < 2)
        throw validation_error("path needs n >= 2 (edge ideal is empty), got " +
                               std::to_string(n));
    return {(n + 2) / 3, (n + 1) / 3};
}

/// Krull dimension of S/I for a fan graph: |W| + 1 if the attach set is a
/// proper subset of the base, n if it covers the base; 1 for the degenerate
/// fan K_n.
inline int fan_dimension(const FanGraphSpec& spec) {
    spec.validate();
    if (spec.block_count() == 0) return 1;
    return spec.attach_covers_base() ? spec.base_size : spec.attach_size() + 1;
}

/// depth(S/I) = 1 + |W| - max_i |W_i|; the degenerate fan routes to the
/// complete-graph value.
inline int fan_depth(const FanGraphSpec& spec) {
    spec.validate();
    if (spec.block_count() == 0) return complete_invariants(spec.base_size).first;
    return 1 + spec.attach_size() - spec.max_block_size();
}

/// reg(S/I) = p when |W| >= n-1 and every block's terminal excess is >= 2,
/// else p + 1, where p counts branch positions with excess >= 2.
inline int fan_regularity(const FanGraphSpec& spec) {
    spec.validate();
    if (spec.block_count() == 0) return complete_invariants(spec.base_size).second;
    const int p = spec.high_excess_count();
    bool terminal_high = true;
    for (const FanBlock& b : spec.blocks)
        if (b.excess(b.size() - 1) < 2) terminal_high = false;
    if (spec.attach_size() >= spec.base_size - 1 && terminal_high) return p;
    return p + 1;
}

/// Full formula report for one fan spec.
inline InvariantReport fan_formula_report(const FanGraphSpec& spec) {
    InvariantReport r;
    r.method = Method::formula;
    r.dim = fan_dimension(spec);
    r.depth = fan_depth(spec);
    r.reg = fan_regularity(spec);
    r.p = spec.block_count() == 0 ? 0 : spec.high_excess_count();
    r.attach_size = spec.attach_size();
    return r;
}

namespace detail {

struct CompositeStructure {
    TheoremQuantities q[2];
    int depth[2];
    int t_structural;  // |{i : T'_i != T_i - 1}|
};

inline CompositeStructure composite_structure(const CompositeSide& left,
                                              const CompositeSide& right) {
    CompositeStructure s{};
    const CompositeSide* sides[2] = {&left, &right};
    s.t_structural = 0;
    for (int i = 0; i < 2; ++i) {
        const CompositeSide& side = *sides[i];
        side.spec.validate();
        if (side.spec.block_count() == 0)
            throw hypothesis_error("composition theorems require k >= 1; side " +
                                   std::to_string(i + 1) + " is a degenerate fan");
        s.q[i] = theorem_quantities(side.spec, side.leaf);
        s.depth[i] = fan_depth(side.spec);
        if (s.q[i].T_prime != s.q[i].T - 1) ++s.t_structural;
    }
    return s;
}

inline SideQuantities side_quantities(const TheoremQuantities& q) {
    SideQuantities out;
    out.base_size = q.base_size;
    out.attach_size = q.attach_size;
    out.T = q.T;
    out.T_prime = q.T_prime;
    out.p = q.p;
    return out;
}

struct CompositeRegData {
    int reg[2];      // reg(G_i) by the fan formula
    int reg_del[2];  // reg(G_i \ v_i) = induced matching number of the deletion
    int t_reg;
};

/// reg(G_i \ v_i) is read off the realized graph through the chordal
/// identity reg = induced matching number; the deletion of a base vertex is
/// not in general presentable as a fan spec.
inline CompositeRegData composite_reg_data(const CompositeSide& left,
                                           const CompositeSide& right,
                                           const CompositeStructure& s) {
    CompositeRegData d{};
    const CompositeSide* sides[2] = {&left, &right};
    d.t_reg = 0;
    for (int i = 0; i < 2; ++i) {
        const CompositeSide& side = *sides[i];
        d.reg[i] = fan_regularity(side.spec);
        Vertex v = side.spec.blocks[s.q[i].leaf_block].vertices[0];
        SimpleGraph deleted = remove_vertex(realize(side.spec).graph, v);
        d.reg_del[i] = induced_matching_number(deleted);
        if (d.reg_del[i] != d.reg[i]) ++d.t_reg;
    }
    return d;
}

inline void fill_sides(InvariantReport& r, const CompositeStructure& s) {
    r.sides = std::array<SideQuantities, 2>{side_quantities(s.q[0]), side_quantities(s.q[1])};
}

}  // namespace detail

/// depth of a circ composite: depth_1 + depth_2 - s with s = 1 for t <= 1
/// and s = 2 for t = 2, t counting sides with T' != T - 1.
inline InvariantReport circ_depth_formula(const CompositeSide& left,
                                          const CompositeSide& right) {
    auto s = detail::composite_structure(left, right);
    InvariantReport r;
    r.method = Method::formula;
    r.t_depth = s.t_structural;
    r.s_depth = s.t_structural <= 1 ? 1 : 2;
    r.depth = s.depth[0] + s.depth[1] - *r.s_depth;
    detail::fill_sides(r, s);
    return r;
}

/// depth of a star composite: depth_1 + depth_2 - s with s = 0 for t = 0
/// and s = 1 otherwise.
inline InvariantReport star_depth_formula(const CompositeSide& left,
                                          const CompositeSide& right) {
    auto s = detail::composite_structure(left, right);
    InvariantReport r;
    r.method = Method::formula;
    r.t_depth = s.t_structural;
    r.s_depth = s.t_structural == 0 ? 0 : 1;
    r.depth = s.depth[0] + s.depth[1] - *r.s_depth;
    detail::fill_sides(r, s);
    return r;
}

/// reg of a circ composite.  t counts sides where deleting the leaf's
/// neighbor changes reg.  t <= 1 gives sum - t; t = 2 splits on whether the
/// attach sets fill the bases.
inline InvariantReport circ_regularity_formula(const CompositeSide& left,
                                               const CompositeSide& right) {
    auto s = detail::composite_structure(left, right);
    auto d = detail::composite_reg_data(left, right, s);
    InvariantReport r;
    r.method = Method::formula;
    r.t_reg = d.t_reg;
    detail::fill_sides(r, s);
    const int sum = d.reg[0] + d.reg[1];
    if (d.t_reg <= 1) {
        r.reg = sum - d.t_reg;
        return r;
    }
    bool some_minus_one = false, low = false;
    for (int i = 0; i < 2; ++i) {
        if (s.q[i].attach_size <= s.q[i].base_size - 2) low = true;
        if (s.q[i].attach_size == s.q[i].base_size - 1) some_minus_one = true;
    }
    if (low)
        throw hypothesis_error(
            "outside theorem cases: t = 2 with an attach set of size <= n - 2");
    r.reg = some_minus_one ? sum - 1 : sum - 2;
    return r;
}

/// reg of a star composite.  t <= 1 (or t = 2 with both attach sets of size
/// n - 1) gives the plain sum; t = 2 with a full attach set drops by one.
inline InvariantReport star_regularity_formula(const CompositeSide& left,
                                               const CompositeSide& right) {
    auto s = detail::composite_structure(left, right);
    auto d = detail::composite_reg_data(left, right, s);
    InvariantReport r;
    r.method = Method::formula;
    r.t_reg = d.t_reg;
    detail::fill_sides(r, s);
    const int sum = d.reg[0] + d.reg[1];
    if (d.t_reg <= 1) {
        r.reg = sum;
        return r;
    }
    bool some_full = false, low = false;
    for (int i = 0; i < 2; ++i) {
        if (s.q[i].attach_size <= s.q[i].base_size - 2) low = true;
        if (s.q[i].attach_size == s.q[i].base_size) some_full = true;
    }
    if (low)
        throw hypothesis_error(
            "outside theorem cases: t = 2 with an attach set of size <= n - 2");
    r.reg = some_full ? sum - 1 : sum;
    return r;
}

/// Combined formula report (depth + reg theorems) for one composite.
inline InvariantReport composite_formula_report(const CompositeSpec& c) {
    InvariantReport depth_part = c.op == GlueOp::circ
                                     ? circ_depth_formula(c.left, c.right)
                                     : star_depth_formula(c.left, c.right);
    InvariantReport reg_part = c.op == GlueOp::circ
                                   ? circ_regularity_formula(c.left, c.right)
                                   : star_regularity_formula(c.left, c.right);
    depth_part.reg = reg_part.reg;
    depth_part.t_reg = reg_part.t_reg;
    return depth_part;
}

/// Leaf removal keeps depth unchanged provided T' = T - 1 around the leaf's
/// block.  Returns the common depth; refuses to predict otherwise.
inline int leaf_removal_depth_identity(const FanGraphSpec& spec, Vertex leaf) {
    auto q = theorem_quantities(spec, leaf);
    if (q.T_prime != q.T - 1)
        throw hypothesis_error("hypothesis not met: T' = " + std::to_string(q.T_prime) +
                               " differs from T - 1 = " + std::to_string(q.T - 1));
    return fan_depth(spec);
}

/// Regularity drop when removing the cut vertex of a pendant edge attached
/// at a base vertex outside the attach set: 1 iff |W| >= n - 2 and every
/// block's terminal excess is >= 2, else 0.
inline int clique_sum_reg_drop(const FanGraphSpec& spec, Vertex v) {
    spec.validate();
    if (v < 1 || v > spec.base_size)
        throw validation_error("vertex " + std::to_string(v) +
                               " is outside the base range [1, " +
                               std::to_string(spec.base_size) + "]");
    for (const FanBlock& b : spec.blocks)
        for (Vertex w : b.vertices)
            if (w == v)
                throw validation_error("vertex " + std::to_string(v) +
                                       " lies in the attach set");
    bool terminal_high = true;
    for (const FanBlock& b : spec.blocks)
        if (b.excess(b.size() - 1) < 2) terminal_high = false;
    return (spec.attach_size() >= spec.base_size - 2 && terminal_high) ? 1 : 0;
}

/// reg of the ideal from reg of the quotient: reg(I) = reg(S/I) + 1.
inline int ideal_reg_from_quotient(int quotient_reg) {
    if (quotient_reg < 0)
        throw validation_error("quotient regularity must be nonnegative, got " +
                               std::to_string(quotient_reg));
    return quotient_reg + 1;
}

}  // namespace fanreg
