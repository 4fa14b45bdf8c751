#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equikh/f2.hpp"

#include <random>

using namespace equikh;

namespace {

// dense reference rank over F2, row reduction on bool matrix
std::size_t dense_rank(std::vector<std::vector<int>> m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    if (!rows) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && !m[piv][c]) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("zero matrix") {
    SparseF2Matrix m;
    m.n_rows = 3;
    m.n_cols = 3;
    auto res = f2_rank_and_bases(m);
    CHECK(res.rank == 0);
    CHECK(res.kernel.size() == 3);
}

TEST_CASE("identity matrix") {
    SparseF2Matrix m;
    m.n_rows = 4;
    m.n_cols = 4;
    for (uint32_t i = 0; i < 4; ++i) m.add(i, i);
    auto res = f2_rank_and_bases(m);
    CHECK(res.rank == 4);
    CHECK(res.kernel.empty());
}

TEST_CASE("random 20x30 rank vs dense oracle, kernel verifies") {
    std::mt19937 rng(12345);
    for (int rep = 0; rep < 20; ++rep) {
        SparseF2Matrix m;
        m.n_rows = 20;
        m.n_cols = 30;
        std::vector<std::vector<int>> dense(20, std::vector<int>(30, 0));
        std::uniform_real_distribution<double> u(0, 1);
        for (uint32_t r = 0; r < 20; ++r)
            for (uint32_t c = 0; c < 30; ++c)
                if (u(rng) < 0.1) {
                    m.add(r, c);
                    dense[r][c] = 1;
                }
        auto res = f2_rank_and_bases(m);
        CHECK(res.rank == dense_rank(dense));
        CHECK(res.rank + res.kernel.size() == 30);
        for (const F2Vector& k : res.kernel) {
            std::vector<int> prod(20, 0);
            for (uint32_t c = 0; c < 30; ++c)
                if (k.get(c))
                    for (uint32_t r = 0; r < 20; ++r) prod[r] ^= dense[r][c];
            for (int r = 0; r < 20; ++r) CHECK(prod[r] == 0);
        }
    }
}

TEST_CASE("solve") {
    std::mt19937 rng(99);
    SparseF2Matrix m;
    m.n_rows = 10;
    m.n_cols = 15;
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<std::vector<int>> dense(10, std::vector<int>(15, 0));
    for (uint32_t r = 0; r < 10; ++r)
        for (uint32_t c = 0; c < 15; ++c)
            if (u(rng) < 0.25) {
                m.add(r, c);
                dense[r][c] = 1;
            }
    F2Vector x0(15);
    for (int c = 0; c < 15; ++c)
        if (u(rng) < 0.5) x0.set(c, true);
    F2Vector b(10);
    for (uint32_t c = 0; c < 15; ++c)
        if (x0.get(c))
            for (uint32_t r = 0; r < 10; ++r)
                if (dense[r][c]) b.flip(r);
    F2Vector x;
    REQUIRE(f2_solve(m, b, x));
    F2Vector check(10);
    for (uint32_t c = 0; c < 15; ++c)
        if (x.get(c))
            for (uint32_t r = 0; r < 10; ++r)
                if (dense[r][c]) check.flip(r);
    CHECK(check == b);
}
