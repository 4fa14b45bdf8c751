#pragma once

#include "equikh/barnatan.hpp"
#include "equikh/borel.hpp"
#include "equikh/symmetry.hpp"

namespace equikh {

// The axis grading. Values are half-integers stored doubled: o2 = 2 o(c),
// u2 = 2 u(c) per crossing, and per-vertex twice-deg_k.
struct KGrading {
    std::vector<int> o2, u2;           // per crossing
    std::vector<int> vertex_k2;        // per vertex bitmask of the cube
};

// Per-crossing values: off-axis: o = 0, u = sign/2; on-axis reversing:
// o = 0, u = sign; on-axis preserving: o = -sign/2, u = sign/2.
KGrading k_grading(const PdDiagram& d, const SymmetryAction& s);

// annotate the generators of a cube complex with twice-deg_k
void annotate_k2(CubeComplex& cube, const KGrading& k);

// The (Q, W)-complex: a Borel complex whose generators carry deg_k; the
// differential's W-exponent is implied as k2(src) - k2(tgt) >= 0. Building
// it checks that d_Q never decreases deg_k.
struct QwComplex {
    QComplex qc;
    // W-exponent of an entry: twice the k-degree gained
    uint16_t wexp(uint32_t src, uint32_t tgt) const {
        return (uint16_t)(qc.gens[tgt].k2 - qc.gens[src].k2);
    }
};
QwComplex build_qw(const QComplex& qc);

// Trigraded dimension data over a window: F2 dimension of homology per
// (gr_h, gr_q, k2) and ranks of the structure maps u, Q, W on homology.
struct QwCell {
    int h, q, k2;
    int dim;
    int rank_u, rank_q, rank_w;
    bool operator==(const QwCell& o) const = default;
};
struct QwWindow {
    int h_lo, h_hi, q_lo, q_hi, k2_lo, k2_hi;
};
std::vector<QwCell> qw_dimension_data(const QwComplex& c, const QwWindow& win);

// dimension data of a free F[u,Q,W]-module description (for comparisons):
// summands F[u,Q,W]/(W^{w_order}) shifted to (h,q,k2); w_order 0 = free
struct QwModuleSummand {
    int h, q, k2;
    int w_order;
};
std::vector<QwCell> qw_module_dimension_data(const std::vector<QwModuleSummand>& summands,
                                             const QwWindow& win);

// W-localized dimension data: dim of H(W^{-1} C) per (h, q) as an
// F2[W,W^{-1}]-grading-collapsed object; equals the Borel data, so two
// equivariant diagrams of the same knot must agree here
std::map<std::pair<int, int>, int> w_inverted_dims(const QwComplex& c, int h_lo, int h_hi,
                                                   int q_lo, int q_hi);

} // namespace equikh
