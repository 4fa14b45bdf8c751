#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equikh/involutive.hpp"
#include "fixtures.hpp"

using namespace equikh;

static const char* kTrefoil = "[1,4,2,5],[3,6,4,1],[5,2,6,3]";
static const char* k946 =
    "[11,18,12,1],[1,10,2,11],[9,2,10,3],[14,4,15,3],[4,14,5,13],"
    "[12,6,13,5],[17,6,18,7],[7,16,8,17],[15,8,16,9]";

namespace {
TauModel model_for(const PdDiagram& d, int basepoint) {
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    CubeComplex cube = build_reduced_pointed(d, basepoint);
    build_tau(cube, *sym);
    return tau_model(cube);
}
} // namespace

TEST_CASE("unknot0: tau = id, s~ = 0, not obstructed") {
    PdDiagram d = parse_pd("unknot0");
    auto sym = detect_symmetry(d);
    EquivariantReport rep = squeezedness_obstruction(d, *sym);
    CHECK(rep.s == 0);
    CHECK(rep.s_tilde == 0);
    CHECK(!rep.obstructed);
}

TEST_CASE("trefoil: tau strict involution, s~ = s, not obstructed") {
    PdDiagram d = parse_pd(kTrefoil);
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    // unreduced tau is strict (validated inside build_tau)
    CubeComplex un = build_unreduced(d);
    build_tau(un, *sym);
    EquivariantReport rep = squeezedness_obstruction(d, *sym);
    CHECK((rep.s == 2 || rep.s == -2));
    CHECK(rep.s_tilde == rep.s);
    CHECK(!rep.obstructed);
}

TEST_CASE("9_46: tau acts nontrivially, s~ = -2, obstructed") {
    PdDiagram d = parse_pd(k946);
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    TauModel m = model_for(d, sym->fixed_edges[0]);
    CHECK(m.s == 0);
    // tau* is nontrivial on reduced Khovanov homology: some bigrading has
    // ker(1 + tau*) smaller than the full dimension
    auto table = tau_star_table(m);
    bool nontrivial = false;
    int total = 0;
    for (auto& row : table) {
        total += row.dim;
        if (row.ker_dim != row.dim) nontrivial = true;
    }
    CHECK(total == 9);
    CHECK(nontrivial);
    CHECK(no_invariant_survivor(m));
    CHECK(e2_degenerate(m));
    CHECK(s_tilde(m) == -2);
    EquivariantReport rep = squeezedness_obstruction(d, *sym);
    CHECK(rep.s == 0);
    CHECK(rep.s_tilde == -2);
    CHECK(rep.obstructed);
}

TEST_CASE("9_46: s~ independent of the fixed basepoint") {
    PdDiagram d = parse_pd(k946);
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    TauModel a = model_for(d, sym->fixed_edges[0]);
    TauModel b = model_for(d, sym->fixed_edges[1]);
    CHECK(s_tilde(a) == s_tilde(b));
    CHECK(a.pres == b.pres);
}

TEST_CASE("9_46: s~ via the unpointed reduced complex agrees") {
    PdDiagram d = parse_pd(k946);
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    CubeComplex ru = build_reduced_unpointed(d);
    build_tau(ru, *sym);
    TauModel m = tau_model(ru);
    CHECK(m.s == 0);
    CHECK(s_tilde(m) == -2);
}

TEST_CASE("kinked unknot: tau = id on homology, s~ = 0") {
    PdDiagram d = parse_pd("[2,2,1,1]");
    auto sym = detect_symmetry(d);
    REQUIRE(sym.has_value());
    EquivariantReport rep = squeezedness_obstruction(d, *sym);
    CHECK(rep.s == 0);
    CHECK(rep.s_tilde == 0);
    CHECK(!rep.obstructed);
}

TEST_CASE("identity-action knot: ker table equals dims") {
    // trefoil: the homological action is forced trivial
    PdDiagram d = parse_pd(kTrefoil);
    auto sym = detect_symmetry(d);
    TauModel m = model_for(d, sym->fixed_edges[0]);
    for (auto& row : tau_star_table(m)) CHECK(row.ker_dim == row.dim);
}

TEST_CASE("unreduced tau-star table rows for unknot0") {
    PdDiagram d = parse_pd("unknot0");
    CubeComplex cube = build_unreduced(d);
    build_tau(cube, trivial_symmetry());
    TauModel m = tau_model(cube);
    auto table = tau_star_table(m);
    REQUIRE(table.size() == 2);
    for (auto& row : table) CHECK(row.ker_dim == row.dim);
}

TEST_CASE("equivariant reduction keeps tau strict and homology equal") {
    PdDiagram d = parse_pd(k946);
    auto sym = detect_symmetry(d);
    CubeComplex cube = build_reduced_pointed(d, sym->fixed_edges[0]);
    build_tau(cube, *sym);
    EquivariantReduction er = equivariant_simplify(cube.c, "tau");
    CHECK(er.small.size() < cube.c.size());
    CHECK(homology(er.small) == homology(cube.c));
    // s~ computed from the small strict model agrees
    TauModel m = tau_model(CubeComplex{CubeKind::ReducedPointed, d, sym->fixed_edges[0],
                                       er.small, {}, {}, {}, {}});
    CHECK(s_tilde(m) == -2);
}
