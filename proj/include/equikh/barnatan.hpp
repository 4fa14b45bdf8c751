#pragma once

#include "equikh/complex.hpp"
#include "equikh/pd.hpp"
#include "equikh/reduce.hpp"
#include "equikh/symmetry.hpp"

#include <unordered_map>

namespace equikh {

enum class CubeKind { Unreduced, ReducedPointed, ReducedUnpointed };

// Bar-Natan complex of a diagram over F[u], built from the cube of
// resolutions with the Frobenius algebra m(x,x) = ux,
// Delta(1) = 1|x + x|1 + u 1|1, Delta(x) = x|x.
//
// For the reduced flavors the quantum grading已 carries the global [(0,-1)]
// shift, so the unknot's reduced tower starts at (0,0).
struct CubeComplex {
    CubeKind kind = CubeKind::Unreduced;
    PdDiagram diagram;
    int basepoint = 0; // pointed reduced only
    FreeComplex c;

    // generator bookkeeping: vertex bitmask and labeling bitmask. For the
    // unreduced/pointed kinds, labeling bit i set = circle i labeled x.
    // For the unpointed kind, bit i (i >= 1) set = factor y_i present.
    std::vector<uint32_t> vertex_of;
    std::vector<uint32_t> labeling_of;

    std::vector<Resolution> resolutions; // per vertex bitmask
    std::vector<uint32_t> block_start;   // per vertex: first gen id

    uint32_t gen_id(uint32_t vertex, uint32_t labeling) const;
};

CubeComplex build_unreduced(const PdDiagram& d);
CubeComplex build_reduced_pointed(const PdDiagram& d, int basepoint);
CubeComplex build_reduced_unpointed(const PdDiagram& d);

// the canonical chain-isomorphism unpointed -> pointed (multiplication by
// x_p in each resolution); verified chain map + bijectivity by callers
SparseMap unpointed_to_pointed(const CubeComplex& un, const CubeComplex& pt);

// Lee/Bar-Natan style canonical cycle for an orientation. The orientation is
// given by a reversal flag per component (all-false = the PD orientation).
// Returned chain lives in an unreduced cube; it is asserted to be a cycle.
Chain canonical_generator(const CubeComplex& cube, const std::vector<bool>& reverse);

// the s-invariant: quantum grading of the free generator of reduced homology
int s_invariant(const PdDiagram& d);

// add the diagrammatic involution to the cube as endo "tau"
void build_tau(CubeComplex& cube, const SymmetryAction& s, bool validate = true);

} // namespace equikh
