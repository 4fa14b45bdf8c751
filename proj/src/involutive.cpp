#include "equikh/involutive.hpp"

#include "equikh/f2.hpp"

#include <algorithm>

namespace equikh {

TauModel tau_model(const CubeComplex& cube, bool track_H) {
    TauModel m;
    ReductionData r = simplify(cube.c, track_H);
    m.minimal = r.minimal;
    m.minimal.endos["tau"] = transfer_endo(r, cube.c, "tau");
    m.dec = decompose(m.minimal);
    m.dec.c = &m.minimal;
    m.pres = m.dec.presentation();
    for (auto& [g, k] : m.pres.torsion_gens) m.max_torsion = std::max(m.max_torsion, k);
    if (m.pres.free_gens.size() == 1) {
        m.s = m.pres.free_gens[0].q;
        if (m.pres.free_gens[0].h != 0)
            throw ComplexError("free generator not in homological degree 0");
    }
    return m;
}

std::vector<TauModel::Cell> TauModel::cells_at(int h, int q) const {
    std::vector<Cell> cells;
    for (uint32_t gidx : dec.free_gens) {
        const Gen& g = minimal.gens[gidx];
        if (g.h != h) continue;
        int dq = g.q - q;
        if (dq >= 0 && dq % 2 == 0) cells.push_back({gidx, (uint16_t)(dq / 2), true});
    }
    for (const Decomposition::Pair& p : dec.pairs) {
        if (p.order < 1) continue;
        const Gen& g = minimal.gens[p.beta];
        if (g.h != h) continue;
        int dq = g.q - q;
        if (dq >= 0 && dq % 2 == 0 && dq / 2 < p.order)
            cells.push_back({p.beta, (uint16_t)(dq / 2), false});
    }
    return cells;
}

std::vector<std::vector<uint8_t>> TauModel::endo_on_cells(
    const SparseMap& e, const std::vector<Cell>& cells) const {
    auto cell_index = [&](uint32_t gen, uint16_t upow) -> int {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].gen == gen && cells[i].upow == upow) return (int)i;
        return -1;
    };
    std::vector<std::vector<uint8_t>> cols;
    for (const Cell& c : cells) {
        Chain rep = dec.representative(c.gen, c.upow);
        Chain img = FreeComplex::apply(e, rep);
        Decomposition::HClass cls = dec.class_of(img);
        std::vector<uint8_t> col(cells.size(), 0);
        for (const Term& t : cls.free_part) {
            int i = cell_index(t.gen, t.exp);
            if (i < 0) throw ComplexError("endo image leaves the bigrading cells");
            col[i] ^= 1;
        }
        for (const Term& t : cls.torsion_part) {
            int i = cell_index(t.gen, t.exp);
            if (i < 0) throw ComplexError("endo image leaves the bigrading cells");
            col[i] ^= 1;
        }
        cols.push_back(col);
    }
    return cols;
}

std::vector<TauTableRow> tau_star_table(const TauModel& m) {
    // u = 0 homology = the minimal model's generators; tau-bar = tau mod u
    std::map<std::pair<int, int>, std::vector<uint32_t>> bygr;
    for (uint32_t i = 0; i < m.minimal.size(); ++i)
        bygr[{m.minimal.gens[i].h, m.minimal.gens[i].q}].push_back(i);
    const SparseMap& tau = m.minimal.endos.at("tau");
    std::vector<TauTableRow> rows;
    for (auto& [gr, gens] : bygr) {
        SparseF2Matrix one_plus_tau;
        one_plus_tau.n_rows = gens.size();
        one_plus_tau.n_cols = gens.size();
        for (std::size_t j = 0; j < gens.size(); ++j) {
            // (1 + tau) mod u
            std::map<uint32_t, int> img;
            img[gens[j]] ^= 1;
            for (const Term& t : tau[gens[j]])
                if (t.exp == 0) img[t.gen] ^= 1;
            for (auto& [g, bit] : img) {
                if (!bit) continue;
                auto it = std::find(gens.begin(), gens.end(), g);
                if (it == gens.end()) throw ComplexError("tau-bar leaves the bigrading");
                one_plus_tau.add((uint32_t)(it - gens.begin()), (uint32_t)j);
            }
        }
        std::size_t rank = f2_rank(one_plus_tau);
        rows.push_back({gr.first, gr.second, (int)gens.size(), (int)(gens.size() - rank)});
    }
    return rows;
}

int s_tilde(const TauModel& m) {
    if (m.pres.free_gens.size() != 1)
        throw ComplexError("s-tilde needs a knotlike complex (free rank 1)");
    const SparseMap& tau = m.minimal.endos.at("tau");
    int lo = m.s - 2 * m.max_torsion - 2;
    for (int i = m.s; i >= lo; i -= 2) {
        auto cells = m.cells_at(0, i);
        if (cells.empty()) continue;
        auto tcols = m.endo_on_cells(tau, cells);
        // (1 + tau*) matrix
        SparseF2Matrix mat;
        mat.n_rows = cells.size();
        mat.n_cols = cells.size();
        for (std::size_t j = 0; j < cells.size(); ++j) {
            std::vector<uint8_t> col = tcols[j];
            col[j] ^= 1;
            for (std::size_t r = 0; r < cells.size(); ++r)
                if (col[r]) mat.add((uint32_t)r, (uint32_t)j);
        }
        F2RankResult rr = f2_rank_and_bases(mat);
        for (const F2Vector& v : rr.kernel) {
            for (std::size_t j = 0; j < cells.size(); ++j)
                if (v.get(j) && cells[j].is_free) return i;
        }
    }
    throw ComplexError("s-tilde search exhausted its window");
}

bool no_invariant_survivor(const TauModel& m) {
    // tau-bar-invariant classes of H(C/u) at (0, s) with nonzero coefficient
    // on the free tower generator (in the decomposed basis, mod u)
    std::vector<uint32_t> gens;
    for (uint32_t i = 0; i < m.minimal.size(); ++i)
        if (m.minimal.gens[i].h == 0 && m.minimal.gens[i].q == m.s) gens.push_back(i);
    if (m.dec.free_gens.size() != 1) throw ComplexError("needs free rank 1");
    uint32_t tower = m.dec.free_gens[0];
    const SparseMap& tau = m.minimal.endos.at("tau");
    // kernel of (1 + tau-bar) on span(gens)
    SparseF2Matrix mat;
    mat.n_rows = gens.size();
    mat.n_cols = gens.size();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::map<uint32_t, int> img;
        img[gens[j]] ^= 1;
        for (const Term& t : tau[gens[j]])
            if (t.exp == 0) img[t.gen] ^= 1;
        for (auto& [g, bit] : img) {
            if (!bit) continue;
            auto it = std::find(gens.begin(), gens.end(), g);
            if (it == gens.end()) throw ComplexError("tau-bar leaves the bigrading");
            mat.add((uint32_t)(it - gens.begin()), (uint32_t)j);
        }
    }
    F2RankResult rr = f2_rank_and_bases(mat);
    for (const F2Vector& v : rr.kernel) {
        // tower coordinate mod u of the class: via coords rows at exp 0
        int coef = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (!v.get(j)) continue;
            for (const Term& t : m.dec.coords[tower])
                if (t.gen == gens[j] && t.exp == 0) coef ^= 1;
        }
        if (coef) return false; // an invariant class survives
    }
    return true;
}

bool e2_degenerate(const TauModel& m) {
    for (auto& [g, k] : m.pres.torsion_gens)
        if (k != 1) return false;
    return true;
}

EquivariantReport squeezedness_obstruction(const PdDiagram& d, const SymmetryAction& sym) {
    EquivariantReport rep;
    if (d.n_crossings() == 0) return rep;
    CubeComplex cube = build_reduced_pointed(d, sym.fixed_edges.at(0));
    build_tau(cube, sym);
    TauModel m = tau_model(cube);
    rep.s = m.s;
    rep.s_tilde = s_tilde(m);
    rep.obstructed = (rep.s != rep.s_tilde);
    return rep;
}

} // namespace equikh
