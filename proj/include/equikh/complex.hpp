#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace equikh {

struct ComplexError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bigraded generator; k2 stores twice the Lobb-Watson k-degree
struct Gen {
    int h = 0;
    int q = 0;
    int k2 = 0;
};

// A term u^exp * gen of a chain. Chains are sorted by (gen, exp) and xor-merged.
struct Term {
    uint32_t gen;
    uint16_t exp;
    bool operator<(const Term& o) const {
        return gen != o.gen ? gen < o.gen : exp < o.exp;
    }
    bool operator==(const Term& o) const { return gen == o.gen && exp == o.exp; }
};
using Chain = std::vector<Term>;

Chain chain_xor(const Chain& a, const Chain& b);
void chain_xor_inplace(Chain& a, const Chain& b, uint16_t shift = 0);
Chain chain_shift(const Chain& a, uint16_t shift);

// sparse F[u]-linear map, one chain per source generator
using SparseMap = std::vector<Chain>;

// Finitely generated free bigraded chain complex over F_2[u].
// gr(d) = (1, 0), gr(u) = (0, -2). Entries are u-monomials; homogeneity is
// validated on construction. Optional named endomorphisms of degree (0, 0).
class FreeComplex {
public:
    std::vector<Gen> gens;
    SparseMap diff;
    std::map<std::string, SparseMap> endos;

    std::size_t size() const { return gens.size(); }

    uint32_t add_gen(int h, int q, int k2 = 0) {
        gens.push_back({h, q, k2});
        diff.push_back({});
        return (uint32_t)(gens.size() - 1);
    }

    // xor a differential term u^exp: src -> tgt (exp must match gradings)
    void add_diff(uint32_t src, uint32_t tgt, uint16_t exp);
    void add_endo_term(const std::string& name, uint32_t src, uint32_t tgt, uint16_t exp);

    Chain apply_diff(const Chain& c) const;
    Chain apply_endo(const std::string& name, const Chain& c) const;
    static Chain apply(const SparseMap& m, const Chain& c);

    // expected u-exponent of a differential entry src->tgt
    uint16_t diff_exp(uint32_t src, uint32_t tgt) const;

    void validate() const;          // homogeneity + d^2 = 0
    void validate_endo(const std::string& name, bool involution) const;

    int h_min() const;
    int h_max() const;

    // uniform grading shift: subtracts (dh, dq) from every generator per the
    // C[(a,b)] convention (an element of bigrading gr gets gr - (a,b))
    void shift_grading(int dh, int dq);
};

// Tensor product with diagonal involutions: gradings add, d = d1 x 1 + 1 x d2,
// and each common endo name is taken to the product endo.
FreeComplex tensor(const FreeComplex& c1, const FreeComplex& c2,
                   const std::vector<std::string>& endo_names = {"tau"},
                   std::vector<std::pair<uint32_t, uint32_t>>* pair_of = nullptr);

} // namespace equikh
