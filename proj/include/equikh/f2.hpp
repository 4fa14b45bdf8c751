#pragma once

#include <cstdint>
#include <vector>

namespace equikh {

// Dense bit-packed vector over F_2.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    F2Vector& operator^=(const F2Vector& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    bool is_zero() const {
        for (uint64_t w : w_) if (w) return false;
        return true;
    }
    // index of lowest set bit, or size() if zero
    std::size_t lowest() const;
    std::size_t popcount() const;

    bool operator==(const F2Vector& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Sparse matrix over F_2: a list of (row, col) positions with implicit value 1.
struct SparseF2Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<std::pair<uint32_t, uint32_t>> entries;

    void add(uint32_t r, uint32_t c) { entries.push_back({r, c}); }
};

struct F2RankResult {
    std::size_t rank = 0;
    // kernel basis: vectors v (length n_cols) with M v = 0
    std::vector<F2Vector> kernel;
    // image basis: vectors (length n_rows) spanning the column space
    std::vector<F2Vector> image;
    // pivot columns of the echelonized matrix
    std::vector<uint32_t> pivot_cols;
};

// Gaussian elimination on bit-packed columns.
F2RankResult f2_rank_and_bases(const SparseF2Matrix& m);

// rank only (no bases), for dimension counting
std::size_t f2_rank(const SparseF2Matrix& m);

// Solve M x = b; returns true and writes a solution into x (length n_cols) if consistent.
bool f2_solve(const SparseF2Matrix& m, const F2Vector& b, F2Vector& x);

} // namespace equikh
