#pragma once

#include "equikh/pd.hpp"

#include <optional>

namespace equikh {

enum class CrossingClass : uint8_t { OffAxis, OnAxisPreserving, OnAxisReversing };

// A PD-code symmetry: the involution i -> ((k - i) mod n) + 1 on edge labels
// carries the code to itself (each crossing tuple mapped by the sign-aware
// reversal rule). For a knot with crossings this presents a strong inversion
// and fixes exactly two edges.
struct SymmetryAction {
    int k = 0;
    int n_edges = 0;
    std::vector<int> crossing_perm;           // induced permutation of crossings
    std::vector<int> fixed_edges;             // exactly 2 for a knot
    std::vector<CrossingClass> crossing_class;

    // the same data after renumbering edges so the first tuple's first entry
    // is 1 (reporting convention; the involution itself is unchanged)
    int k_normalized = 0;
    std::vector<int> fixed_edges_normalized;

    int apply_edge(int i) const {
        int n = n_edges;
        return ((k - i) % n + n) % n + 1;
    }
};

// Scan k = 0..n-1 ascending and return the first k whose edge involution
// preserves the tuple set with exactly two fixed edges, or nullopt.
// Defined for knot diagrams (single component) with at least one crossing.
std::optional<SymmetryAction> detect_symmetry(const PdDiagram& d);

// Trivial action for the crossingless unknot.
SymmetryAction trivial_symmetry();

// Classify crossings relative to the axis. A crossing is off-axis iff moved
// by crossing_perm. A fixed crossing is reversing iff the edge involution
// fixes the under-strand edge set {a,c} (and then {b,d}) setwise, and
// preserving iff it exchanges the two strand sets.
std::vector<CrossingClass> classify_crossings(const PdDiagram& d, const SymmetryAction& s);

// Apply the symmetry to the whole code (relabel + per-crossing reversal
// rule); used by tests for the re-detection idempotence property.
PdDiagram apply_symmetry(const PdDiagram& d, const SymmetryAction& s);

} // namespace equikh
