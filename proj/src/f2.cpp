#include "equikh/f2.hpp"

#include <bit>

namespace equikh {

std::size_t F2Vector::lowest() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return (i << 6) + std::countr_zero(w_[i]);
    return n_;
}

std::size_t F2Vector::popcount() const {
    std::size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

namespace {

// column-echelon elimination; each work column carries its original combination
struct Echelon {
    std::vector<F2Vector> cols;   // reduced columns (length n_rows)
    std::vector<F2Vector> combo;  // combination of original columns (length n_cols)
    std::vector<uint32_t> pivot_col_of;
};

Echelon echelonize(const SparseF2Matrix& m) {
    Echelon e;
    std::vector<F2Vector> col(m.n_cols, F2Vector(m.n_rows));
    for (auto [r, c] : m.entries) col[c].flip(r);
    // pivot row -> index into e.cols
    std::vector<std::size_t> piv(m.n_rows, SIZE_MAX);
    for (uint32_t c = 0; c < m.n_cols; ++c) {
        F2Vector v = col[c];
        F2Vector combo(m.n_cols);
        combo.flip(c);
        for (;;) {
            std::size_t low = v.lowest();
            if (low == m.n_rows) break;
            if (piv[low] == SIZE_MAX) {
                piv[low] = e.cols.size();
                e.cols.push_back(v);
                e.combo.push_back(combo);
                e.pivot_col_of.push_back(c);
                break;
            }
            v ^= e.cols[piv[low]];
            combo ^= e.combo[piv[low]];
        }
        if (v.is_zero() && !combo.is_zero() && v.size() == m.n_rows) {
            // zero column: combo is a kernel vector; stash it via sentinel
            e.cols.push_back(v);
            e.combo.push_back(combo);
            e.pivot_col_of.push_back(UINT32_MAX);
        }
    }
    return e;
}

} // namespace

F2RankResult f2_rank_and_bases(const SparseF2Matrix& m) {
    Echelon e = echelonize(m);
    F2RankResult res;
    for (std::size_t i = 0; i < e.cols.size(); ++i) {
        if (e.pivot_col_of[i] == UINT32_MAX) {
            res.kernel.push_back(e.combo[i]);
        } else {
            res.image.push_back(e.cols[i]);
            res.pivot_cols.push_back(e.pivot_col_of[i]);
            ++res.rank;
        }
    }
    return res;
}

std::size_t f2_rank(const SparseF2Matrix& m) {
    Echelon e = echelonize(m);
    std::size_t r = 0;
    for (auto p : e.pivot_col_of)
        if (p != UINT32_MAX) ++r;
    return r;
}

bool f2_solve(const SparseF2Matrix& m, const F2Vector& b, F2Vector& x) {
    // reduce b against the echelon columns, tracking the combination
    Echelon e = echelonize(m);
    std::vector<std::size_t> piv(m.n_rows, SIZE_MAX);
    for (std::size_t i = 0; i < e.cols.size(); ++i) {
        if (e.pivot_col_of[i] == UINT32_MAX) continue;
        piv[e.cols[i].lowest()] = i;
    }
    F2Vector v = b;
    F2Vector combo(m.n_cols);
    for (;;) {
        std::size_t low = v.lowest();
        if (low == m.n_rows) break;
        if (piv[low] == SIZE_MAX) return false;
        v ^= e.cols[piv[low]];
        combo ^= e.combo[piv[low]];
    }
    x = combo;
    return true;
}

} // namespace equikh
