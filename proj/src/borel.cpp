#include "equikh/borel.hpp"

#include "equikh/f2.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace equikh {

void QComplex::add_term(uint32_t src, uint32_t tgt, uint16_t qexp) {
    const Gen& s = gens[src];
    const Gen& t = gens[tgt];
    if (t.h != s.h + 1 - (int)qexp || t.q < s.q || (t.q - s.q) % 2)
        throw ComplexError("inhomogeneous Borel entry");
    QTerm nt{tgt, qexp};
    auto& row = diff[src];
    auto it = std::lower_bound(row.begin(), row.end(), nt);
    if (it != row.end() && *it == nt) row.erase(it);
    else row.insert(it, nt);
}

uint16_t QComplex::uexp(uint32_t src, uint32_t tgt) const {
    return (uint16_t)((gens[tgt].q - gens[src].q) / 2);
}

int QComplex::h_min() const {
    int m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) m = i ? std::min(m, gens[i].h) : gens[i].h;
    return m;
}

int QComplex::h_max() const {
    int m = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) m = i ? std::max(m, gens[i].h) : gens[i].h;
    return m;
}

void QComplex::validate() const {
    for (uint32_t s = 0; s < size(); ++s) {
        std::map<std::pair<uint32_t, uint16_t>, int> acc;
        for (const QTerm& t1 : diff[s])
            for (const QTerm& t2 : diff[t1.gen])
                acc[{t2.gen, (uint16_t)(t1.qexp + t2.qexp)}] ^= 1;
        for (auto& [k, bit] : acc)
            if (bit) throw ComplexError("d_Q^2 != 0");
    }
}

QComplex assemble_borel(const FreeComplex& c, const std::string& tau_name) {
    const SparseMap& tau = c.endos.at(tau_name);
    QComplex qc;
    for (const Gen& g : c.gens) qc.add_gen(g.h, g.q, g.k2);
    for (uint32_t s = 0; s < c.size(); ++s) {
        for (const Term& t : c.diff[s]) qc.add_term(s, t.gen, 0);
        // Q (1 + tau)
        qc.add_term(s, s, 1);
        for (const Term& t : tau[s]) qc.add_term(s, t.gen, 1);
    }
    qc.validate();
    return qc;
}

uint32_t SliceWindow::id_of(uint32_t base, uint16_t j) const {
    for (uint32_t i = 0; i < origin.size(); ++i)
        if (origin[i].first == base && origin[i].second == j) return i;
    throw ComplexError("slice generator not in window");
}

SliceWindow slice_window(const QComplex& qc, int h_lo, int h_hi, int B) {
    SliceWindow w;
    std::unordered_map<uint64_t, uint32_t> index;
    auto key = [](uint32_t g, uint16_t j) { return (uint64_t(g) << 16) | j; };
    for (uint32_t g = 0; g < qc.size(); ++g) {
        int jmax = h_hi - qc.gens[g].h;
        for (int j = 0; j <= jmax; ++j) {
            if (B != kInfinity && j >= B) break;
            if (qc.gens[g].h + j < h_lo) continue;
            index[key(g, (uint16_t)j)] =
                w.c.add_gen(qc.gens[g].h + j, qc.gens[g].q, qc.gens[g].k2);
            w.origin.push_back({g, (uint16_t)j});
        }
    }
    for (uint32_t i = 0; i < w.origin.size(); ++i) {
        auto [g, j] = w.origin[i];
        for (const QComplex::QTerm& t : qc.diff[g]) {
            int jt = j + t.qexp;
            if (B != kInfinity && jt >= B) continue;
            auto it = index.find(key(t.gen, (uint16_t)jt));
            if (it == index.end()) continue;
            w.c.add_diff(i, it->second, qc.uexp(g, t.gen));
        }
    }
    return w;
}

ModulePresentation borel_slice_homology(const QComplex& qc, int A, int B) {
    if (A < qc.h_min()) throw ComplexError("slice degree below the complex");
    SliceWindow w = slice_window(qc, A - 1, A + 1, B);
    Decomposition dec = decompose(w.c);
    return dec.presentation_at(A);
}

int s_q(const QComplex& qc, int A, int B) {
    if (A < 0 || (B != kInfinity && B <= A))
        throw ComplexError("s_q needs 0 <= A < B");
    ModulePresentation p = borel_slice_homology(qc, A, B);
    if (p.free_gens.size() != 1)
        throw ComplexError("slice not knotlike: free rank != 1");
    return p.free_gens[0].q;
}

std::string SqGrid::to_string() const {
    std::ostringstream os;
    for (int B = 1; B <= B_max + 1; ++B) {
        int b = B <= B_max ? B : kInfinity;
        os << (b == kInfinity ? std::string("B=inf") : "B=" + std::to_string(b)) << ":";
        for (int A = 0; A <= A_max && (b == kInfinity || A < b); ++A)
            os << " " << value.at({A, b});
        os << "\n";
    }
    return os.str();
}

SqGrid s_q_grid(const QComplex& qc, int A_max, int B_max) {
    SqGrid g;
    g.A_max = A_max;
    g.B_max = B_max;
    std::vector<int> Bs;
    for (int B = 1; B <= B_max; ++B) Bs.push_back(B);
    Bs.push_back(kInfinity);
    for (int B : Bs)
        for (int A = 0; A <= A_max; ++A) {
            if (B != kInfinity && A >= B) continue;
            g.value[{A, B}] = s_q(qc, A, B);
        }
    for (int B : Bs)
        for (int A = 0; A + 1 <= A_max; ++A) {
            if (B != kInfinity && A + 1 >= B) continue;
            if (g.value.at({A, B}) > g.value.at({A + 1, B}))
                throw ComplexError("s_q grid not monotone in A");
        }
    for (int A = 0; A <= A_max; ++A) {
        int prev = 0;
        bool have_prev = false;
        for (int B : Bs) {
            if (B != kInfinity && A >= B) continue;
            int v = g.value.at({A, B});
            if (have_prev && prev < v) throw ComplexError("s_q grid not monotone in B");
            prev = v;
            have_prev = true;
        }
    }
    return g;
}

QComplex perturb_transfer(const ReductionData& r, const FreeComplex& original,
                          const std::string& tau_name) {
    const SparseMap& tau = original.endos.at(tau_name);
    auto omega = [&](const Chain& x) {
        Chain out = FreeComplex::apply(tau, x);
        chain_xor_inplace(out, x);
        return out;
    };
    QComplex qc;
    for (const Gen& g : r.minimal.gens) qc.add_gen(g.h, g.q, g.k2);
    for (uint32_t m = 0; m < r.minimal.size(); ++m)
        for (const Term& t : r.minimal.diff[m]) qc.add_term(m, t.gen, 0);
    int width = original.h_max() - original.h_min() + 2;
    for (uint32_t m = 0; m < r.minimal.size(); ++m) {
        Chain w = omega(r.apply_g(Chain{{m, 0}}));
        for (int i = 0;; ++i) {
            if (w.empty()) break;
            if (i > width) throw ComplexError("perturbation series failed to terminate");
            Chain fm;
            for (const Term& t : w) chain_xor_inplace(fm, r.f[t.gen], t.exp);
            for (const Term& t : r.to_min(fm)) {
                if (t.exp != qc.uexp(m, t.gen))
                    throw ComplexError("perturbation term inhomogeneous");
                QComplex::QTerm nt{t.gen, (uint16_t)(i + 1)};
                auto& row = qc.diff[m];
                auto it = std::lower_bound(row.begin(), row.end(), nt);
                if (it != row.end() && *it == nt) row.erase(it);
                else row.insert(it, nt);
            }
            w = omega(r.apply_H(w));
        }
    }
    qc.validate();
    return qc;
}

ModulePresentation QModuleExpect::slice(int A, int B) const {
    ModulePresentation p;
    for (const QModuleSummand& s : summands) {
        int j = A - s.h;
        if (j < 0) continue;
        if (s.q_order != 0 && j >= s.q_order) continue;
        if (B != kInfinity && j >= B) continue;
        if (s.u_order == 0) p.free_gens.push_back({A, s.q, 0});
        else p.torsion_gens.push_back({{A, s.q, 0}, s.u_order});
    }
    p.normalize();
    return p;
}

int QModuleExpect::q_rank(int A) const {
    int r = 0;
    for (const QModuleSummand& s : summands) {
        int j = A - s.h;
        if (j < 0) continue;
        if (s.q_order != 0 && j + 1 >= s.q_order) continue;
        ++r;
    }
    return r;
}

bool matches_q_module(const QComplex& qc, const QModuleExpect& expect, int h_lo, int h_hi,
                      std::string* why) {
    SliceWindow w = slice_window(qc, h_lo - 1, h_hi + 2, kInfinity);
    Decomposition dec = decompose(w.c);
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int A = h_lo; A <= h_hi; ++A) {
        ModulePresentation got = dec.presentation_at(A);
        ModulePresentation want = expect.slice(A, kInfinity);
        if (!(got == want))
            return fail("slice " + std::to_string(A) + ": got " + got.to_string() +
                        " want " + want.to_string());
    }
    for (int A = h_lo; A <= h_hi; ++A) {
        std::vector<uint32_t> src, tgt;
        for (uint32_t g : dec.free_gens) {
            if (w.c.gens[g].h == A) src.push_back(g);
            if (w.c.gens[g].h == A + 1) tgt.push_back(g);
        }
        for (auto& p : dec.pairs) {
            if (p.order < 1) continue;
            if (w.c.gens[p.beta].h == A) src.push_back(p.beta);
            if (w.c.gens[p.beta].h == A + 1) tgt.push_back(p.beta);
        }
        SparseF2Matrix mat;
        mat.n_rows = tgt.size();
        mat.n_cols = src.size();
        for (std::size_t j = 0; j < src.size(); ++j) {
            Chain rep = dec.representative(src[j], 0);
            Chain img;
            for (const Term& t : rep) {
                auto [base, qq] = w.origin[t.gen];
                chain_xor_inplace(img, Chain{{w.id_of(base, (uint16_t)(qq + 1)), t.exp}});
            }
            auto cls = dec.class_of(img);
            auto scan = [&](const Chain& part) {
                for (const Term& t : part) {
                    if (t.exp != 0) continue; // induced map mod u
                    auto it = std::find(tgt.begin(), tgt.end(), t.gen);
                    if (it == tgt.end()) throw ComplexError("Q image outside slice");
                    mat.add((uint32_t)(it - tgt.begin()), (uint32_t)j);
                }
            };
            scan(cls.free_part);
            scan(cls.torsion_part);
        }
        int got = (int)f2_rank(mat);
        int want = expect.q_rank(A);
        if (got != want)
            return fail("Q-rank at " + std::to_string(A) + ": got " + std::to_string(got) +
                        " want " + std::to_string(want));
    }
    return true;
}

} // namespace equikh
