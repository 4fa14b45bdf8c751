#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equikh/reduce.hpp"
#include "fixtures.hpp"

#include <random>

using namespace equikh;

TEST_CASE("two-generator cancellation") {
    // da = b: minimal model is zero, H(b) = a
    FreeComplex c;
    uint32_t a = c.add_gen(0, 0);
    uint32_t b = c.add_gen(1, 0);
    c.add_diff(a, b, 0);
    ReductionData r = simplify(c);
    CHECK(r.minimal.size() == 0);
    CHECK(r.apply_H(Chain{{b, 0}}) == Chain{{a, 0}});
    r.verify(c);
}

TEST_CASE("graded smith on dy = uz") {
    FreeComplex c = fixtures::staircase_up();
    ModulePresentation p = homology(c);
    REQUIRE(p.free_gens.size() == 1);
    CHECK(p.free_gens[0].h == 0);
    CHECK(p.free_gens[0].q == 0);
    REQUIRE(p.torsion_gens.size() == 1);
    CHECK(p.torsion_gens[0].first.h == 1);
    CHECK(p.torsion_gens[0].first.q == 2);
    CHECK(p.torsion_gens[0].second == 1);
}

TEST_CASE("zero differential: all free") {
    FreeComplex c;
    c.add_gen(0, 0);
    c.add_gen(1, 3);
    c.add_gen(-2, 4);
    ModulePresentation p = homology(c);
    CHECK(p.free_gens.size() == 3);
    CHECK(p.torsion_gens.empty());
}

TEST_CASE("single entry u^2: torsion order 2") {
    FreeComplex c;
    uint32_t a = c.add_gen(0, 0);
    uint32_t b = c.add_gen(1, 4);
    c.add_diff(a, b, 2);
    ModulePresentation p = homology(c);
    CHECK(p.free_gens.empty());
    REQUIRE(p.torsion_gens.size() == 1);
    CHECK(p.torsion_gens[0].second == 2);
    CHECK(p.torsion_gens[0].first.q == 4);
}

TEST_CASE("nine-generator model reduces to five") {
    FreeComplex c = fixtures::nine_gen();
    c.validate();
    c.validate_endo("tau", true);
    ReductionData r = simplify(c);
    CHECK(r.minimal.size() == 5);
    r.verify(c);
    // homology: free (0,0) and torsion of order 1 at (1,2) and (0,2)
    ModulePresentation p = homology(c);
    REQUIRE(p.free_gens.size() == 1);
    CHECK(p.free_gens[0].q == 0);
    CHECK(p.torsion_gens.size() == 2);
}

TEST_CASE("transfer of the identity is the identity") {
    FreeComplex c = fixtures::nine_gen();
    SparseMap id(c.size());
    for (uint32_t i = 0; i < c.size(); ++i) id[i] = {{i, 0}};
    c.endos["id"] = id;
    ReductionData r = simplify(c);
    SparseMap tid = transfer_endo(r, c, "id");
    for (uint32_t m = 0; m < r.minimal.size(); ++m) CHECK(tid[m] == Chain{{m, 0}});
}

TEST_CASE("transferred involution is an involution up to homotopy") {
    FreeComplex c = fixtures::nine_gen();
    ReductionData r = simplify(c);
    SparseMap tau2 = transfer_endo(r, c, "tau");
    r.minimal.endos["tau"] = tau2;
    // chain map strictly
    for (uint32_t m = 0; m < r.minimal.size(); ++m) {
        Chain lhs = FreeComplex::apply(tau2, r.minimal.diff[m]);
        Chain rhs = r.minimal.apply_diff(tau2[m]);
        CHECK(lhs == rhs);
    }
    // (f tau g)^2 + id = [d, f tau H tau g]
    const SparseMap& tauC = c.endos.at("tau");
    for (uint32_t m = 0; m < r.minimal.size(); ++m) {
        Chain sq = FreeComplex::apply(tau2, tau2[m]);
        chain_xor_inplace(sq, Chain{{m, 0}});
        Chain w = FreeComplex::apply(tauC, r.apply_H(FreeComplex::apply(tauC, r.g[m])));
        Chain dw = r.apply_f(c.apply_diff(w));
        Chain wd = r.apply_f(FreeComplex::apply(
            tauC, r.apply_H(FreeComplex::apply(tauC, r.apply_g(r.minimal.diff[m])))));
        Chain rhs = chain_xor(dw, wd);
        CHECK(sq == rhs);
    }
}

TEST_CASE("simplify preserves homology") {
    FreeComplex c = fixtures::nine_gen();
    ReductionData r = simplify(c);
    ModulePresentation before = decompose(c).presentation();
    ModulePresentation after = decompose(r.minimal).presentation();
    CHECK(before == after);
}

TEST_CASE("tensor: unit acts as identity") {
    FreeComplex c = fixtures::nine_gen();
    FreeComplex u = fixtures::unit();
    FreeComplex t = tensor(c, u);
    CHECK(t.size() == c.size());
    CHECK(homology(t) == homology(c));
}

TEST_CASE("tensor dims multiply and Kunneth at u=0") {
    FreeComplex a = fixtures::staircase_up();
    FreeComplex b = fixtures::five_gen(true);
    FreeComplex t = tensor(a, b);
    t.validate();
    t.validate_endo("tau", true);
    CHECK(t.size() == a.size() * b.size());
    // Kunneth over F2 at u=0: dim H(t/u) = dim H(a/u) dim H(b/u); the
    // minimal model size equals dim H(C/u)
    auto dimu0 = [](const FreeComplex& c) { return simplify(c, false).minimal.size(); };
    CHECK(dimu0(t) == dimu0(a) * dimu0(b));
}

TEST_CASE("decompose is basis-order independent") {
    FreeComplex c = fixtures::nine_gen();
    // shuffled copy
    std::vector<uint32_t> perm(c.size());
    for (uint32_t i = 0; i < c.size(); ++i) perm[i] = i;
    std::mt19937 rng(7);
    std::shuffle(perm.begin(), perm.end(), rng);
    FreeComplex s;
    std::vector<uint32_t> inv(c.size());
    for (uint32_t i = 0; i < c.size(); ++i) inv[perm[i]] = i;
    for (uint32_t i = 0; i < c.size(); ++i) {
        const Gen& g = c.gens[perm[i]];
        s.add_gen(g.h, g.q, g.k2);
    }
    for (uint32_t i = 0; i < c.size(); ++i)
        for (const Term& t : c.diff[i]) s.add_diff(inv[i], inv[t.gen], t.exp);
    CHECK(homology(c) == homology(s));
}

TEST_CASE("random small complexes: identities hold") {
    std::mt19937 rng(2024);
    for (int rep = 0; rep < 30; ++rep) {
        // random bigraded complex: generators on a small grid, random
        // homogeneous entries, then square-zero by construction: build as a
        // tensor-like double complex of elementary pieces instead; easier:
        // random upper-triangular d with d^2 = 0 via pairs
        FreeComplex c;
        int n = 4 + (int)(rng() % 6);
        for (int i = 0; i < n; ++i) {
            int h = (int)(rng() % 4);
            int q = 2 * (int)(rng() % 5);
            c.add_gen(h, q);
        }
        // add entries from a random matching so d^2 = 0 holds trivially:
        // each source used once, targets distinct
        std::vector<int> used(n, 0);
        for (int tries = 0; tries < 2 * n; ++tries) {
            uint32_t a = rng() % n, b = rng() % n;
            if (a == b || used[a] != 0 || used[b] != 0) continue;
            if (c.gens[b].h != c.gens[a].h + 1) continue;
            int dq = c.gens[b].q - c.gens[a].q;
            if (dq < 0 || dq % 2) continue;
            c.add_diff(a, b, (uint16_t)(dq / 2));
            used[a] = used[b] = 1;
        }
        c.validate();
        ReductionData r = simplify(c);
        r.verify(c);
        CHECK(decompose(c).presentation() == decompose(r.minimal).presentation());
    }
}

TEST_CASE("class_of and representatives agree") {
    FreeComplex c = fixtures::nine_gen();
    Decomposition d = decompose(c);
    for (uint32_t fg : d.free_gens) {
        auto cls = d.class_of(d.representative(fg, 0));
        CHECK(cls.free_part == Chain{{fg, 0}});
        CHECK(cls.torsion_part.empty());
    }
    for (const auto& p : d.pairs) {
        if (p.order < 1) continue;
        auto cls = d.class_of(d.representative(p.beta, 0));
        CHECK(cls.torsion_part == Chain{{p.beta, 0}});
        // u^order times the torsion class dies
        auto dead = d.class_of(d.representative(p.beta, (uint16_t)p.order));
        CHECK(dead.is_zero());
    }
}
