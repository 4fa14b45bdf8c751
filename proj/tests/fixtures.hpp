#pragma once

// Shared algebraic fixtures for tests: the small tau-complexes that drive
// the golden computations, plus a deterministic diagram generator.

#include "equikh/complex.hpp"
#include "equikh/pd.hpp"

#include <random>
#include <sstream>

namespace equikh::fixtures {

// C = span{x, y, z}, dy = uz, (1+tau) y = x
// gradings x (0,0), y (0,0), z (1,2)
inline FreeComplex staircase_up() {
    FreeComplex c;
    uint32_t x = c.add_gen(0, 0);
    uint32_t y = c.add_gen(0, 0);
    uint32_t z = c.add_gen(1, 2);
    c.add_diff(y, z, 1);
    SparseMap tau(3);
    tau[x] = {{x, 0}};
    tau[y] = chain_xor({{y, 0}}, {{x, 0}});
    tau[z] = {{z, 0}};
    c.endos["tau"] = tau;
    return c;
}

// C = span{x, y, z}, dz = uy, (1+tau) x = y
// gradings x (0,0), y (0,0), z (-1,-2)
inline FreeComplex staircase_down() {
    FreeComplex c;
    uint32_t x = c.add_gen(0, 0);
    uint32_t y = c.add_gen(0, 0);
    uint32_t z = c.add_gen(-1, -2);
    c.add_diff(z, y, 1);
    SparseMap tau(3);
    tau[x] = chain_xor({{x, 0}}, {{y, 0}});
    tau[y] = {{y, 0}};
    tau[z] = {{z, 0}};
    c.endos["tau"] = tau;
    return c;
}

// C = span{x, r, r', y, z}: dr' = r, dz = uy; two involutions:
// (1+tau1) r' = y;      (1+tau2) x = r, (1+tau2) r' = y
// gradings x (0,0), r (0,0), r' (-1,0), y (-1,0), z (-2,-2)
inline FreeComplex five_gen(bool second_involution) {
    FreeComplex c;
    uint32_t x = c.add_gen(0, 0);
    uint32_t r = c.add_gen(0, 0);
    uint32_t rp = c.add_gen(-1, 0);
    uint32_t y = c.add_gen(-1, 0);
    uint32_t z = c.add_gen(-2, -2);
    c.add_diff(rp, r, 0);
    c.add_diff(z, y, 1);
    SparseMap tau(5);
    tau[x] = {{x, 0}};
    tau[r] = {{r, 0}};
    tau[rp] = chain_xor({{rp, 0}}, {{y, 0}});
    tau[y] = {{y, 0}};
    tau[z] = {{z, 0}};
    if (second_involution) tau[x] = chain_xor({{x, 0}}, {{r, 0}});
    c.endos["tau"] = tau;
    return c;
}

// the nine-generator complex whose Borel build has homology
// F[u,Q](0,0) + F[u,Q]/(u,Q^2)(0,2); the tensor-bound model.
// generators: x (0,0), y (0,0), z (1,2), r (0,0), r' (-1,0),
//             s (1,2), s' (0,2), R (-1,0), S (0,2)
// d: y -> uz, r -> us, r' -> r + us', s' -> s, R -> uS
// (1+tau): y -> x + r, z -> s, r' -> R, s' -> S
inline FreeComplex nine_gen() {
    FreeComplex c;
    uint32_t x = c.add_gen(0, 0);
    uint32_t y = c.add_gen(0, 0);
    uint32_t z = c.add_gen(1, 2);
    uint32_t r = c.add_gen(0, 0);
    uint32_t rp = c.add_gen(-1, 0);
    uint32_t s = c.add_gen(1, 2);
    uint32_t sp = c.add_gen(0, 2);
    uint32_t R = c.add_gen(-1, 0);
    uint32_t S = c.add_gen(0, 2);
    c.add_diff(y, z, 1);
    c.add_diff(r, s, 1);
    c.add_diff(rp, r, 0);
    c.add_diff(rp, sp, 1);
    c.add_diff(sp, s, 0);
    c.add_diff(R, S, 1);
    SparseMap tau(9);
    for (uint32_t i = 0; i < 9; ++i) tau[i] = {{i, 0}};
    tau[y] = chain_xor(chain_xor({{y, 0}}, {{x, 0}}), {{r, 0}});
    tau[z] = chain_xor({{z, 0}}, {{s, 0}});
    tau[rp] = chain_xor({{rp, 0}}, {{R, 0}});
    tau[sp] = chain_xor({{sp, 0}}, {{S, 0}});
    c.endos["tau"] = tau;
    return c;
}

// one free generator at (0,0) with tau = id (tensor unit)
inline FreeComplex unit() {
    FreeComplex c;
    c.add_gen(0, 0);
    c.endos["tau"] = {{{0, 0}}};
    return c;
}

// Deterministic diagram source for property suites: closures of random
// braid words. Components get consecutive edge labels by construction.
class BraidSampler {
public:
    explicit BraidSampler(uint64_t seed) : rng_(seed) {}

    // returns a PD-code string for a random braid closure with at most
    // max_crossings crossings (connected diagrams only)
    std::string next(int max_crossings) {
        for (;;) {
            int strands = 2 + (int)(rng_() % 3);
            int len = 1 + (int)(rng_() % (uint64_t)max_crossings);
            std::vector<int> word;
            for (int i = 0; i < len; ++i) {
                int gen = 1 + (int)(rng_() % (uint64_t)(strands - 1));
                int sgn = (rng_() % 2) ? 1 : -1;
                word.push_back(sgn * gen);
            }
            // require the word to touch every adjacent pair so the closure
            // is a connected diagram
            std::vector<bool> used(strands, false);
            used[0] = true;
            for (int w : word) used[std::abs(w)] = true;
            bool conn = true;
            for (int i = 1; i < strands; ++i) conn &= used[i];
            if (!conn) continue;
            auto pd = closure_pd(strands, word);
            if (!pd.empty()) return pd;
        }
    }

    // build the PD code of a braid closure; returns "" if the diagram fails
    // validation (the caller retries)
    std::string closure_pd(int strands, const std::vector<int>& word) {
        int next_arc = strands;
        std::vector<int> cur(strands);
        for (int i = 0; i < strands; ++i) cur[i] = i;
        struct Cr { int nw, ne, sw, se; bool nw_over; };
        std::vector<Cr> crs;
        std::vector<int> succ; // over arcs
        auto grow = [&](int n) { while ((int)succ.size() < n) succ.push_back(-1); };
        for (int w : word) {
            int g = std::abs(w) - 1;
            int nw = cur[g], ne = cur[g + 1];
            int sw = next_arc++, se = next_arc++;
            grow(next_arc);
            succ[nw] = se; // NW strand exits SE
            succ[ne] = sw;
            cur[g] = sw;
            cur[g + 1] = se;
            crs.push_back({nw, ne, sw, se, w > 0});
        }
        grow(next_arc);
        // closure identifies each strand's top arc with its bottom arc
        std::vector<int> rep(next_arc);
        for (int i = 0; i < next_arc; ++i) rep[i] = i;
        for (int i = 0; i < strands; ++i) {
            if (cur[i] == i) return ""; // untouched strand: split diagram
            rep[i] = cur[i];
            succ[cur[i]] = succ[i];
        }
        for (Cr& c : crs) {
            c.nw = rep[c.nw];
            c.ne = rep[c.ne];
            c.sw = rep[c.sw];
            c.se = rep[c.se];
        }
        for (int a = strands; a < next_arc; ++a)
            if (succ[a] >= 0) succ[a] = rep[succ[a]];
        // label edges consecutively per component
        std::vector<int> label(next_arc, 0);
        int next_label = 1;
        std::vector<bool> seen(next_arc, false);
        for (int start = strands; start < next_arc; ++start) {
            if (seen[start]) continue;
            int a = start;
            while (!seen[a]) {
                seen[a] = true;
                label[a] = next_label++;
                a = succ[a];
            }
        }
        std::ostringstream os;
        bool first = true;
        for (const Cr& c : crs) {
            int a, b, cc, d;
            if (c.nw_over) { // under enters NE
                a = label[c.ne]; b = label[c.nw]; cc = label[c.sw]; d = label[c.se];
            } else {
                a = label[c.nw]; b = label[c.sw]; cc = label[c.se]; d = label[c.ne];
            }
            os << (first ? "" : ",") << "[" << a << "," << b << "," << cc << "," << d << "]";
            first = false;
        }
        try {
            PdDiagram d = parse_pd(os.str());
            (void)d;
        } catch (const PdError&) {
            return "";
        }
        return os.str();
    }

private:
    std::mt19937_64 rng_;
};

} // namespace equikh::fixtures
