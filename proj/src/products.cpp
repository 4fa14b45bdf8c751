#include "equikh/products.hpp"

namespace equikh {

FreeComplex connected_sum_complex(const FreeComplex& c1, const FreeComplex& c2) {
    if (!c1.endos.count("tau") || !c2.endos.count("tau"))
        throw ComplexError("connected sum needs involutions on both factors");
    FreeComplex t = tensor(c1, c2);
    t.validate();
    t.validate_endo("tau", /*involution=*/true);
    return t;
}

QComplex borel_of_tensor(const FreeComplex& c1, const FreeComplex& c2) {
    const SparseMap& t1 = c1.endos.at("tau");
    const SparseMap& t2 = c2.endos.at("tau");
    std::size_t n2 = c2.size();
    auto id = [&](uint32_t i, uint32_t j) { return (uint32_t)(i * n2 + j); };
    QComplex qc;
    for (uint32_t i = 0; i < c1.size(); ++i)
        for (uint32_t j = 0; j < c2.size(); ++j)
            qc.add_gen(c1.gens[i].h + c2.gens[j].h, c1.gens[i].q + c2.gens[j].q,
                       c1.gens[i].k2 + c2.gens[j].k2);
    auto omega = [](const SparseMap& t, uint32_t g) {
        Chain out = t[g];
        chain_xor_inplace(out, Chain{{g, 0}});
        return out;
    };
    for (uint32_t i = 0; i < c1.size(); ++i)
        for (uint32_t j = 0; j < c2.size(); ++j) {
            uint32_t src = id(i, j);
            // d_{Q,1} x 1: differential and Q(1+tau_1) on the first factor
            for (const Term& t : c1.diff[i]) qc.add_term(src, id(t.gen, j), 0);
            for (const Term& t : omega(t1, i)) qc.add_term(src, id(t.gen, j), 1);
            // 1 x d_{Q,2}
            for (const Term& t : c2.diff[j]) qc.add_term(src, id(i, t.gen), 0);
            for (const Term& t : omega(t2, j)) qc.add_term(src, id(i, t.gen), 1);
            // Q (1+tau_1) x (1+tau_2): cancels the two diagonal Q-terms'
            // overcounting of Q(1 + tau_1 x tau_2)
            for (const Term& a : omega(t1, i))
                for (const Term& b : omega(t2, j))
                    qc.add_term(src, id(a.gen, b.gen), 1);
        }
    qc.validate();
    // exact identity with the Borel complex of the tensor product
    QComplex direct = assemble_borel(tensor(c1, c2));
    if (direct.diff != qc.diff) throw ComplexError("borel_of_tensor identity failed");
    return qc;
}

} // namespace equikh
