#include "equikh/lobb_watson.hpp"

#include "equikh/f2.hpp"

#include <algorithm>

namespace equikh {

KGrading k_grading(const PdDiagram& d, const SymmetryAction& s) {
    KGrading k;
    int n = d.n_crossings();
    k.o2.resize(n);
    k.u2.resize(n);
    for (int i = 0; i < n; ++i) {
        int sg = d.crossings[i].sign;
        switch (s.crossing_class.at(i)) {
        case CrossingClass::OffAxis:
            k.o2[i] = 0;
            k.u2[i] = sg;
            break;
        case CrossingClass::OnAxisReversing:
            k.o2[i] = 0;
            k.u2[i] = 2 * sg;
            break;
        case CrossingClass::OnAxisPreserving:
            k.o2[i] = -sg;
            k.u2[i] = sg;
            break;
        }
    }
    uint32_t nv = n ? (1u << n) : 1;
    k.vertex_k2.resize(nv, 0);
    for (uint32_t v = 0; v < nv; ++v) {
        int acc = 0;
        for (int i = 0; i < n; ++i) {
            bool one = (v >> i) & 1;
            bool oriented = (d.crossings[i].sign > 0) ? !one : one;
            acc += oriented ? k.o2[i] : k.u2[i];
        }
        k.vertex_k2[v] = acc;
    }
    return k;
}

void annotate_k2(CubeComplex& cube, const KGrading& k) {
    for (uint32_t g = 0; g < cube.c.size(); ++g)
        cube.c.gens[g].k2 = k.vertex_k2.at(cube.vertex_of[g]);
}

QwComplex build_qw(const QComplex& qc) {
    for (uint32_t s = 0; s < qc.size(); ++s)
        for (const QComplex::QTerm& t : qc.diff[s])
            if (qc.gens[t.gen].k2 < qc.gens[s].k2)
                throw ComplexError("differential decreases deg_k (Lobb-Watson filtration)");
    return QwComplex{qc};
}

namespace {

// chain basis of a trigraded cell: generators g admitting nonnegative
// exponents a = (q_g - q)/2, b = h - h_g, w = k2_g - k2
std::vector<uint32_t> cell_basis(const QComplex& qc, int h, int q, int k2, bool with_w) {
    std::vector<uint32_t> out;
    for (uint32_t g = 0; g < qc.size(); ++g) {
        if (h - qc.gens[g].h < 0) continue;
        int dq = qc.gens[g].q - q;
        if (dq < 0 || dq % 2) continue;
        if (with_w && qc.gens[g].k2 - k2 < 0) continue;
        out.push_back(g);
    }
    return out;
}

SparseF2Matrix cell_diff(const QComplex& qc, const std::vector<uint32_t>& src,
                         const std::vector<uint32_t>& tgt) {
    SparseF2Matrix m;
    m.n_rows = tgt.size();
    m.n_cols = src.size();
    for (std::size_t j = 0; j < src.size(); ++j)
        for (const QComplex::QTerm& t : qc.diff[src[j]]) {
            auto it = std::lower_bound(tgt.begin(), tgt.end(), t.gen);
            if (it != tgt.end() && *it == t.gen) m.add((uint32_t)(it - tgt.begin()), (uint32_t)j);
        }
    return m;
}

struct CellHomology {
    std::vector<uint32_t> basis;
    std::vector<F2Vector> cycles;     // kernel basis (coords over basis)
    std::vector<F2Vector> boundaries; // image basis from one degree lower
    int dim() const { return (int)cycles.size() - (int)boundaries.size(); }
};

CellHomology cell_homology(const QComplex& qc, int h, int q, int k2, bool with_w) {
    CellHomology ch;
    ch.basis = cell_basis(qc, h, q, k2, with_w);
    auto below = cell_basis(qc, h - 1, q, k2, with_w);
    auto above = cell_basis(qc, h + 1, q, k2, with_w);
    auto out = cell_diff(qc, ch.basis, above);
    ch.cycles = f2_rank_and_bases(out).kernel;
    auto in = cell_diff(qc, below, ch.basis);
    ch.boundaries = f2_rank_and_bases(in).image;
    return ch;
}

// rank of the induced map on homology for a chain map that is the identity
// inclusion on the generator-indexed bases
int induced_rank(const CellHomology& src, const CellHomology& tgt) {
    // express each source cycle in the target basis, then compute
    // rank([images | target boundaries]) - rank(target boundaries)
    SparseF2Matrix with_b, only_b;
    with_b.n_rows = tgt.basis.size();
    only_b.n_rows = tgt.basis.size();
    uint32_t col = 0;
    for (const F2Vector& z : src.cycles) {
        for (std::size_t i = 0; i < src.basis.size(); ++i) {
            if (!z.get(i)) continue;
            auto it = std::lower_bound(tgt.basis.begin(), tgt.basis.end(), src.basis[i]);
            if (it == tgt.basis.end() || *it != src.basis[i])
                throw ComplexError("structure map leaves the window cell");
            with_b.add((uint32_t)(it - tgt.basis.begin()), col);
        }
        ++col;
    }
    uint32_t bcol = 0;
    for (const F2Vector& b : tgt.boundaries) {
        for (std::size_t i = 0; i < tgt.basis.size(); ++i)
            if (b.get(i)) {
                with_b.add((uint32_t)i, col + bcol);
                only_b.add((uint32_t)i, bcol);
            }
        ++bcol;
    }
    with_b.n_cols = col + bcol;
    only_b.n_cols = bcol;
    return (int)(f2_rank(with_b) - f2_rank(only_b));
}

} // namespace

std::vector<QwCell> qw_dimension_data(const QwComplex& c, const QwWindow& win) {
    // generators of the complex must have gradings inside the window so no
    // torsion can hide outside it
    for (const Gen& g : c.qc.gens)
        if (g.h < win.h_lo || g.h > win.h_hi || g.q < win.q_lo || g.q > win.q_hi ||
            g.k2 < win.k2_lo || g.k2 > win.k2_hi)
            throw ComplexError("window too small for the complex");
    std::vector<QwCell> cells;
    for (int h = win.h_lo; h <= win.h_hi; ++h)
        for (int q = win.q_lo; q <= win.q_hi; ++q)
            for (int k2 = win.k2_lo; k2 <= win.k2_hi; ++k2) {
                CellHomology here = cell_homology(c.qc, h, q, k2, true);
                if (here.cycles.empty() && here.basis.empty()) continue;
                QwCell cell{h, q, k2, here.dim(), 0, 0, 0};
                if (cell.dim < 0) throw ComplexError("negative homology dimension");
                if (cell.dim > 0) {
                    cell.rank_u = induced_rank(here, cell_homology(c.qc, h, q - 2, k2, true));
                    cell.rank_q = induced_rank(here, cell_homology(c.qc, h + 1, q, k2, true));
                    cell.rank_w = induced_rank(here, cell_homology(c.qc, h, q, k2 - 1, true));
                }
                if (cell.dim != 0) cells.push_back(cell);
            }
    return cells;
}

std::vector<QwCell> qw_module_dimension_data(const std::vector<QwModuleSummand>& summands,
                                             const QwWindow& win) {
    auto contributes = [](const QwModuleSummand& s, int h, int q, int k2) {
        int b = h - s.h;
        int dq = s.q - q;
        int w = s.k2 - k2;
        if (b < 0 || dq < 0 || dq % 2 || w < 0) return false;
        if (s.w_order != 0 && w >= s.w_order) return false;
        return true;
    };
    std::vector<QwCell> cells;
    for (int h = win.h_lo; h <= win.h_hi; ++h)
        for (int q = win.q_lo; q <= win.q_hi; ++q)
            for (int k2 = win.k2_lo; k2 <= win.k2_hi; ++k2) {
                QwCell cell{h, q, k2, 0, 0, 0, 0};
                for (const auto& s : summands) {
                    if (!contributes(s, h, q, k2)) continue;
                    ++cell.dim;
                    if (contributes(s, h, q - 2, k2)) ++cell.rank_u;
                    if (contributes(s, h + 1, q, k2)) ++cell.rank_q;
                    if (contributes(s, h, q, k2 - 1)) ++cell.rank_w;
                }
                if (cell.dim != 0) cells.push_back(cell);
            }
    return cells;
}

std::map<std::pair<int, int>, int> w_inverted_dims(const QwComplex& c, int h_lo, int h_hi,
                                                   int q_lo, int q_hi) {
    // inverting W frees the k-grading; what remains is the Borel homology
    std::map<std::pair<int, int>, int> out;
    for (int h = h_lo; h <= h_hi; ++h)
        for (int q = q_lo; q <= q_hi; ++q) {
            CellHomology ch = cell_homology(c.qc, h, q, 0, false);
            if (ch.dim() > 0) out[{h, q}] = ch.dim();
        }
    return out;
}

} // namespace equikh
