#pragma once

#include <array>
#include <optional>

namespace fanreg {

enum class Method { formula, oracle };

inline const char* to_string(Method m) { return m == Method::formula ? "formula" : "oracle"; }

/// Per-side quantities carried by the composition theorems.
struct SideQuantities {
    int base_size = 0;    // n_i
    int attach_size = 0;  // |W_i|
    int T = 0;
    int T_prime = 0;
    int p = 0;
};

/// Computed invariants plus the intermediate theorem quantities, tagged
/// with how they were obtained.  Absent fields were not meaningful for the
/// producing operation (composites have no dimension formula, regularity
/// theorems carry no s, ...).
struct InvariantReport {
    Method method = Method::formula;
    std::optional<int> dim;
    std::optional<int> depth;
    std::optional<int> reg;

    // Single-fan intermediates.
    std::optional<int> p;
    std::optional<int> attach_size;

    // Composite intermediates.
    std::optional<std::array<SideQuantities, 2>> sides;
    std::optional<int> t_depth;  // |{i : T'_i != T_i - 1}|
    std::optional<int> s_depth;
    std::optional<int> t_reg;    // |{i : reg(G_i \ v_i) != reg(G_i)}|
};

}  // namespace fanreg
