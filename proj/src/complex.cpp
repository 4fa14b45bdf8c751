#include "equikh/complex.hpp"

#include <algorithm>

namespace equikh {

Chain chain_xor(const Chain& a, const Chain& b) {
    Chain out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++i; ++j; }
        else if (a[i] < b[j]) out.push_back(a[i++]);
        else out.push_back(b[j++]);
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

void chain_xor_inplace(Chain& a, const Chain& b, uint16_t shift) {
    if (b.empty()) return;
    if (shift == 0) { a = chain_xor(a, b); return; }
    Chain bs = chain_shift(b, shift);
    a = chain_xor(a, bs);
}

Chain chain_shift(const Chain& a, uint16_t shift) {
    Chain out = a;
    for (auto& t : out) t.exp = (uint16_t)(t.exp + shift);
    std::sort(out.begin(), out.end());
    return out;
}

void FreeComplex::add_diff(uint32_t src, uint32_t tgt, uint16_t exp) {
    if (exp != diff_exp(src, tgt)) throw ComplexError("inhomogeneous differential entry");
    chain_xor_inplace(diff[src], Chain{{tgt, exp}});
}

void FreeComplex::add_endo_term(const std::string& name, uint32_t src, uint32_t tgt, uint16_t exp) {
    auto& m = endos[name];
    if (m.empty()) m.resize(gens.size());
    if (gens[tgt].h != gens[src].h || gens[src].q - gens[tgt].q != 2 * exp)
        throw ComplexError("inhomogeneous endomorphism entry");
    chain_xor_inplace(m[src], Chain{{tgt, exp}});
}

Chain FreeComplex::apply(const SparseMap& m, const Chain& c) {
    Chain out;
    for (const Term& t : c)
        if (t.gen < m.size()) chain_xor_inplace(out, m[t.gen], t.exp);
    return out;
}

Chain FreeComplex::apply_diff(const Chain& c) const { return apply(diff, c); }

Chain FreeComplex::apply_endo(const std::string& name, const Chain& c) const {
    auto it = endos.find(name);
    if (it == endos.end()) throw ComplexError("unknown endomorphism " + name);
    return apply(it->second, c);
}

uint16_t FreeComplex::diff_exp(uint32_t src, uint32_t tgt) const {
    const Gen& s = gens[src];
    const Gen& t = gens[tgt];
    int dq = t.q - s.q;
    if (t.h != s.h + 1 || dq < 0 || dq % 2) throw ComplexError("inhomogeneous differential entry");
    return (uint16_t)(dq / 2);
}

void FreeComplex::validate() const {
    for (uint32_t s = 0; s < size(); ++s)
        for (const Term& t : diff[s])
            if (t.exp != diff_exp(s, t.gen)) throw ComplexError("differential exponent mismatch");
    for (uint32_t s = 0; s < size(); ++s)
        if (!apply_diff(diff[s]).empty()) throw ComplexError("d^2 != 0");
}

void FreeComplex::validate_endo(const std::string& name, bool involution) const {
    const SparseMap& m = endos.at(name);
    for (uint32_t s = 0; s < size(); ++s) {
        Chain lhs = apply(m, diff[s]);
        Chain rhs = apply_diff(m[s]);
        if (lhs != rhs) throw ComplexError("endomorphism is not a chain map");
        if (involution) {
            Chain sq = apply(m, m[s]);
            if (sq != Chain{{s, 0}}) throw ComplexError("endomorphism is not an involution");
        }
    }
}

int FreeComplex::h_min() const {
    int m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) m = i ? std::min(m, gens[i].h) : gens[i].h;
    return m;
}

int FreeComplex::h_max() const {
    int m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) m = i ? std::max(m, gens[i].h) : gens[i].h;
    return m;
}

void FreeComplex::shift_grading(int dh, int dq) {
    for (auto& g : gens) { g.h -= dh; g.q -= dq; }
}

FreeComplex tensor(const FreeComplex& c1, const FreeComplex& c2,
                   const std::vector<std::string>& endo_names,
                   std::vector<std::pair<uint32_t, uint32_t>>* pair_of) {
    FreeComplex out;
    std::size_t n2 = c2.size();
    auto id = [&](uint32_t i, uint32_t j) { return (uint32_t)(i * n2 + j); };
    for (uint32_t i = 0; i < c1.size(); ++i)
        for (uint32_t j = 0; j < c2.size(); ++j) {
            out.add_gen(c1.gens[i].h + c2.gens[j].h, c1.gens[i].q + c2.gens[j].q,
                        c1.gens[i].k2 + c2.gens[j].k2);
            if (pair_of) pair_of->push_back({i, j});
        }
    for (uint32_t i = 0; i < c1.size(); ++i)
        for (uint32_t j = 0; j < c2.size(); ++j) {
            for (const Term& t : c1.diff[i]) out.add_diff(id(i, j), id(t.gen, j), t.exp);
            for (const Term& t : c2.diff[j]) out.add_diff(id(i, j), id(i, t.gen), t.exp);
        }
    for (const std::string& name : endo_names) {
        auto i1 = c1.endos.find(name);
        auto i2 = c2.endos.find(name);
        if (i1 == c1.endos.end() || i2 == c2.endos.end())
            throw ComplexError("tensor factors must both carry endo " + name);
        for (uint32_t i = 0; i < c1.size(); ++i)
            for (uint32_t j = 0; j < c2.size(); ++j)
                for (const Term& t1 : i1->second[i])
                    for (const Term& t2 : i2->second[j])
                        out.add_endo_term(name, id(i, j), id(t1.gen, t2.gen),
                                          (uint16_t)(t1.exp + t2.exp));
    }
    return out;
}

} // namespace equikh
