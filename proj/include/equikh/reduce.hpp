#pragma once

#include "equikh/complex.hpp"

#include <optional>

namespace equikh {

// F_2[u]-module presentation of homology: free generators and u-torsion
// generators with their annihilator order.
struct ModulePresentation {
    std::vector<Gen> free_gens;
    std::vector<std::pair<Gen, int>> torsion_gens; // (grading, order k >= 1)

    // canonical sort for comparisons
    void normalize();
    bool operator==(const ModulePresentation& o) const;
    std::string to_string() const;
    // dimension of H(C/u) implied by the presentation, per bigrading
    std::map<std::pair<int, int>, int> e1_dims() const;
};

// Result of cancelling every u^0 differential entry, with tracked homotopy
// equivalence data: f: C -> M, g: M -> C, gf = id_C + dH + Hd, fg = id_M.
struct ReductionData {
    FreeComplex minimal;
    std::vector<uint32_t> orig_of_min;  // minimal index -> original index
    std::vector<uint32_t> min_of_orig;  // original -> minimal index or UINT32_MAX

    SparseMap f;  // original gen -> chain of surviving original gens
    SparseMap g;  // minimal gen -> chain in original coords
    SparseMap H;  // original gen -> chain in original coords (degree (-1,0))
    bool has_H = false;

    Chain to_min(const Chain& surviving_orig) const;
    Chain apply_f(const Chain& orig) const;      // returns minimal coords
    Chain apply_g(const Chain& min_chain) const; // returns original coords
    Chain apply_H(const Chain& orig) const;

    // exact identity checks (fg = id, gf = id + dH + Hd); needs H
    void verify(const FreeComplex& original) const;
};

ReductionData simplify(const FreeComplex& c, bool track_H = true);

// Conjugate a named endomorphism through the reduction: f o e o g. Returns
// the induced map on the minimal model; it is a chain map, and when e is an
// involution it is one up to homotopy (and on homology strictly).
SparseMap transfer_endo(const ReductionData& r, const FreeComplex& original,
                        const std::string& name);

// Equivariant partial reduction: cancel u^0 pairs in orbits of a strict
// involution so that the transferred involution stays a strict involution.
// Used to shrink diagram complexes before tensor products.
struct EquivariantReduction {
    FreeComplex small; // carries endo "tau", strict
};
EquivariantReduction equivariant_simplify(const FreeComplex& c, const std::string& tau_name);

// Full decomposition over F[u]: iterated cancellation by increasing
// u-exponent splits the complex into free generators and torsion pairs
// d(alpha) = u^k beta. Tracks the change of basis both ways.
struct Decomposition {
    const FreeComplex* c = nullptr;
    std::vector<uint32_t> free_gens;                      // surviving indices
    struct Pair { uint32_t alpha, beta; int order; };     // order >= 1 torsion; 0 = cancelled
    std::vector<Pair> pairs;
    // final basis vectors in input coordinates (column map)
    SparseMap basis;    // indexed by input gen id; identity off the touched set
    // coordinate functionals: T[gamma] = row expressing the gamma-coordinate
    SparseMap coords;   // indexed by input gen id

    ModulePresentation presentation() const;
    ModulePresentation presentation_at(int h) const; // restricted to one degree

    // homology class of a cycle: coordinates on free generators (plain
    // chains, exponent = u power) and torsion generators (exponent < order)
    struct HClass {
        Chain free_part;    // terms (free gen, a)
        Chain torsion_part; // terms (beta, a), a < order(beta)
        bool is_zero() const { return free_part.empty() && torsion_part.empty(); }
    };
    HClass class_of(const Chain& cycle) const;
    Chain representative(uint32_t final_gen, uint16_t upower) const;
    int order_of(uint32_t beta) const; // torsion order, 0 if free/cancelled
};

Decomposition decompose(const FreeComplex& c);

// presentation of H_*(C) over F[u]: simplify + decompose
ModulePresentation homology(const FreeComplex& c);

} // namespace equikh
