#pragma once

#include "equikh/complex.hpp"
#include "equikh/reduce.hpp"

#include <limits>

namespace equikh {

constexpr int kInfinity = std::numeric_limits<int>::max();

// A complex over F[u, Q] with gr(Q) = (1, 0), given by F[u]-generators and
// differential entries decorated with Q-powers. u-exponents stay implied by
// quantum gradings; the Q-power j shifts the homological degree by j.
struct QComplex {
    std::vector<Gen> gens;
    struct QTerm {
        uint32_t gen;
        uint16_t qexp;
        bool operator<(const QTerm& o) const {
            return gen != o.gen ? gen < o.gen : qexp < o.qexp;
        }
        bool operator==(const QTerm& o) const = default;
    };
    std::vector<std::vector<QTerm>> diff;

    std::size_t size() const { return gens.size(); }
    uint32_t add_gen(int h, int q, int k2 = 0) {
        gens.push_back({h, q, k2});
        diff.push_back({});
        return (uint32_t)(gens.size() - 1);
    }
    void add_term(uint32_t src, uint32_t tgt, uint16_t qexp);
    // u-exponent of an entry, from the gradings
    uint16_t uexp(uint32_t src, uint32_t tgt) const;

    int h_min() const;
    int h_max() const;
    void validate() const; // homogeneity and d_Q^2 = 0
};

// Borel complex of a strict involution: d_Q = d + Q (1 + tau).
QComplex assemble_borel(const FreeComplex& c, const std::string& tau_name = "tau");

// One F[u]-homological window [h_lo, h_hi] of the (Q^B-truncated) Borel
// complex: generators are Q^j copies with j < B (B = kInfinity for the full
// complex). Gen ids are dense; `key_of` maps (gen, j) pairs for reuse.
struct SliceWindow {
    FreeComplex c;
    std::vector<std::pair<uint32_t, uint16_t>> origin; // (base gen, q power)
    uint32_t id_of(uint32_t base, uint16_t j) const;
};
SliceWindow slice_window(const QComplex& qc, int h_lo, int h_hi, int B);

// homology of the truncated Borel complex at homological degree A
ModulePresentation borel_slice_homology(const QComplex& qc, int A, int B);

// quantum grading of the free generator of the slice (knotlike inputs)
int s_q(const QComplex& qc, int A, int B);

// full grid of s_q over 0 <= A <= A_max, B in {1..B_max, infinity}; the
// monotonicity chains are asserted
struct SqGrid {
    int A_max, B_max;
    // value(A, B): B in 1..B_max, plus row B = kInfinity
    std::map<std::pair<int, int>, int> value;
    std::string to_string() const;
};
SqGrid s_q_grid(const QComplex& qc, int A_max, int B_max);

// Homological perturbation of the Borel differential onto a reduction's
// minimal model: d' + Q f (sum_i (Q (1+tau) H)^i) (1+tau) g.
QComplex perturb_transfer(const ReductionData& r, const FreeComplex& original,
                          const std::string& tau_name = "tau");

// Descriptions of F[u,Q]-modules for the golden comparisons: a direct sum of
// shifted copies of F[u,Q] / (u^{u_order}, Q^{q_order}), order 0 = none.
struct QModuleSummand {
    int h, q;
    int u_order; // 0 = u-free
    int q_order; // 0 = Q-free
};
struct QModuleExpect {
    std::vector<QModuleSummand> summands;
    // slice presentation at homological degree A for truncation B
    ModulePresentation slice(int A, int B) const;
    // rank of multiplication by Q from slice A to slice A+1 (untruncated)
    int q_rank(int A) const;
};

// Checks computed slice data of qc against the expected module over the
// window [h_lo, h_hi]; compares presentations and Q-map ranks. Intended for
// complexes of small total dimension.
bool matches_q_module(const QComplex& qc, const QModuleExpect& expect, int h_lo, int h_hi,
                      std::string* why = nullptr);

} // namespace equikh
