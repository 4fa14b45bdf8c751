#pragma once

#include "equikh/borel.hpp"
#include "equikh/complex.hpp"

namespace equikh {

// Connected sums at the tau-complex level: the reduced complex of a
// connected sum is the tensor product with the diagonal involution.
FreeComplex connected_sum_complex(const FreeComplex& c1, const FreeComplex& c2);

// Borel differential of a tensor product:
//   d_{Q,1} x 1 + 1 x d_{Q,2} + Q (1+tau_1) x (1+tau_2).
// Asserted to coincide entrywise with assemble_borel(tensor(c1, c2)).
QComplex borel_of_tensor(const FreeComplex& c1, const FreeComplex& c2);

// the Borel construction viewed as a functor on strict tau-complexes
inline QComplex br(const FreeComplex& c) { return assemble_borel(c); }

} // namespace equikh
