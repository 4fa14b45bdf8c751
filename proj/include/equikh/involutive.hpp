#pragma once

#include "equikh/barnatan.hpp"
#include "equikh/reduce.hpp"

namespace equikh {

// Minimal model of a cube complex with the transferred involution and the
// full F[u]-decomposition; everything downstream (tables, s-tilde, Borel
// slices) reads off this.
struct TauModel {
    FreeComplex minimal;      // carries endo "tau" (the transferred one)
    Decomposition dec;        // decomposition of `minimal`
    ModulePresentation pres;
    int s = 0;                // quantum grading of the free generator (knots)
    int max_torsion = 0;

    // F2 basis of H at bigrading (h,q): cells are (final gen, u-power)
    struct Cell {
        uint32_t gen;
        uint16_t upow;
        bool is_free;
    };
    std::vector<Cell> cells_at(int h, int q) const;
    // matrix of an endo chain map on H restricted to bigrading (h,q)
    // columns indexed by cells; returns coordinates per column
    std::vector<std::vector<uint8_t>> endo_on_cells(const SparseMap& e,
                                                    const std::vector<Cell>& cells) const;
};

TauModel tau_model(const CubeComplex& cube_with_tau, bool track_H = false);

// Rows of the "dim Kh, dim ker(1+tau*)" table, one per supported bigrading
// of the u=0 homology.
struct TauTableRow {
    int h, q;
    int dim;
    int ker_dim;
};
std::vector<TauTableRow> tau_star_table(const TauModel& m);

// The equivariant s-invariant: maximum i such that reduced homology has a
// tau-invariant u-nontorsion class in bigrading (0, i).
int s_tilde(const TauModel& m);

// convenience drivers from a diagram
struct EquivariantReport {
    int s = 0;
    int s_tilde = 0;
    bool obstructed = false; // not equivariantly squeezed when s != s~
};
EquivariantReport squeezedness_obstruction(const PdDiagram& d, const SymmetryAction& sym);

// true when no tau-invariant class of Khr at (0, s) survives the Bar-Natan
// spectral sequence (the corpus search criterion)
bool no_invariant_survivor(const TauModel& m);

// all torsion of order one, i.e. the spectral sequence degenerates at E2
bool e2_degenerate(const TauModel& m);

} // namespace equikh
