#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equikh/pd.hpp"
#include "equikh/symmetry.hpp"

using namespace equikh;

static const char* kTrefoil = "[1,4,2,5],[3,6,4,1],[5,2,6,3]";
static const char* k946 =
    "[11,18,12,1],[1,10,2,11],[9,2,10,3],[14,4,15,3],[4,14,5,13],"
    "[12,6,13,5],[17,6,18,7],[7,16,8,17],[15,8,16,9]";

TEST_CASE("parse 9_46") {
    PdDiagram d = parse_pd(k946);
    CHECK(d.n_crossings() == 9);
    CHECK(d.n_edges == 18);
    CHECK(d.is_knot());
    CHECK(d.n_plus + d.n_minus == 9);
}

TEST_CASE("parse unknot0") {
    PdDiagram d = parse_pd("unknot0");
    CHECK(d.n_crossings() == 0);
    CHECK(d.n_edges == 0);
}

TEST_CASE("parse trefoil: 6 edges, equal signs") {
    PdDiagram d = parse_pd(kTrefoil);
    CHECK(d.n_crossings() == 3);
    CHECK(d.n_edges == 6);
    bool all_equal = d.n_plus == 3 || d.n_minus == 3;
    CHECK(all_equal);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_pd("[1,2,3]"), PdError);
    CHECK_THROWS_AS(parse_pd("[1,1,1,1],[2,2,2,2]"), PdError);
    CHECK_THROWS_AS(parse_pd("garbage"), PdError);
    // edge appearing once / three times
    CHECK_THROWS_AS(parse_pd("[1,2,3,4],[1,2,3,3]"), PdError);
}

TEST_CASE("resolve trefoil extremes") {
    PdDiagram d = parse_pd(kTrefoil);
    // with the corpus-pinned smoothing convention the all-oriented
    // resolution has the Seifert circles
    Resolution r0 = resolve(d, {0, 0, 0});
    Resolution r1 = resolve(d, {1, 1, 1});
    CHECK(r0.n_circles() + r1.n_circles() == 5);
    // the oriented resolution (all crossings same sign) has 2 circles
    int oriented_bit = d.n_plus == 3 ? 0 : 1;
    Resolution ro = resolve(d, std::vector<uint8_t>(3, (uint8_t)oriented_bit));
    CHECK(ro.n_circles() == 2);
}

TEST_CASE("resolve: adjacent vertices differ by one circle") {
    PdDiagram d = parse_pd(k946);
    std::vector<uint8_t> v(9, 0);
    for (int step = 0; step < 9; ++step) {
        Resolution a = resolve(d, v);
        std::vector<uint8_t> w = v;
        w[step] ^= 1;
        Resolution b = resolve(d, w);
        int diff = a.n_circles() - b.n_circles();
        CHECK((diff == 1 || diff == -1));
        v = w;
    }
}

TEST_CASE("resolve wrong length") {
    PdDiagram d = parse_pd(kTrefoil);
    CHECK_THROWS_AS(resolve(d, {0, 0}), PdError);
}

TEST_CASE("every edge appears twice across tuples") {
    PdDiagram d = parse_pd(k946);
    std::vector<int> count(d.n_edges + 1, 0);
    for (auto& c : d.crossings)
        for (int s = 0; s < 4; ++s) count[c.e[s]]++;
    for (int e = 1; e <= d.n_edges; ++e) CHECK(count[e] == 2);
}

TEST_CASE("detect symmetry 9_46") {
    PdDiagram d = parse_pd(k946);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    CHECK(s->k == 17);
    CHECK(s->fixed_edges == std::vector<int>{9, 18});
    // in the normalized numbering (first tuple entry = 1) this is the
    // paper's action: k = 15 with fixed strands {8, 17}
    CHECK(s->k_normalized == 15);
    CHECK(s->fixed_edges_normalized == std::vector<int>{8, 17});
    // the axis passes through three crossings of this code, all of them
    // orientation reversing (so their o(c) vanishes and the oriented
    // resolution has k-degree zero)
    int reversing = 0, preserving = 0;
    for (auto c : s->crossing_class) {
        if (c == CrossingClass::OnAxisReversing) ++reversing;
        if (c == CrossingClass::OnAxisPreserving) ++preserving;
    }
    CHECK(reversing == 3);
    CHECK(preserving == 0);
}

TEST_CASE("detect symmetry trefoil: smallest k, fixed edges") {
    PdDiagram d = parse_pd(kTrefoil);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    CHECK(s->k == 1);
    CHECK(s->fixed_edges == std::vector<int>{1, 4});
}

TEST_CASE("unknot0 trivial symmetry") {
    PdDiagram d = parse_pd("unknot0");
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    CHECK(s->crossing_perm.empty());
}

TEST_CASE("asymmetric diagram yields none") {
    // a trefoil diagram with two kinks of opposite handedness placed so that
    // no PD-code symmetry survives
    PdDiagram d = parse_pd("[5,8,6,9],[7,10,8,1],[9,6,10,7],[3,4,4,5],[1,3,2,2]");
    CHECK(d.is_knot());
    auto s = detect_symmetry(d);
    CHECK(!s.has_value());
}

TEST_CASE("re-detection after applying the symmetry") {
    PdDiagram d = parse_pd(k946);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    PdDiagram d2 = apply_symmetry(d, *s);
    auto s2 = detect_symmetry(d2);
    REQUIRE(s2.has_value());
    CHECK(s2->k == s->k);
    CHECK(s2->fixed_edges == s->fixed_edges);
}

TEST_CASE("off-axis crossings come in pairs") {
    PdDiagram d = parse_pd(k946);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    int off = 0;
    for (auto c : s->crossing_class)
        if (c == CrossingClass::OffAxis) ++off;
    CHECK(off % 2 == 0);
}

TEST_CASE("positive kink: symmetric, on-axis reversing") {
    PdDiagram d = parse_pd("[2,2,1,1]");
    CHECK(d.n_plus == 1);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    CHECK(s->fixed_edges.size() == 2);
    REQUIRE(s->crossing_class.size() == 1);
    CHECK(s->crossing_class[0] == CrossingClass::OnAxisReversing);
    // oriented (0-)resolution has two circles
    CHECK(resolve(d, {0}).n_circles() == 2);
    CHECK(resolve(d, {1}).n_circles() == 1);
}

TEST_CASE("trefoil on-axis crossing classifies") {
    PdDiagram d = parse_pd(kTrefoil);
    auto s = detect_symmetry(d);
    REQUIRE(s.has_value());
    int on_axis = 0;
    for (auto c : s->crossing_class)
        if (c != CrossingClass::OffAxis) ++on_axis;
    CHECK(on_axis == 1);
}

TEST_CASE("mirror flips signs and is an involution on codes") {
    PdDiagram d = parse_pd(k946);
    PdDiagram m = mirror(d);
    CHECK(m.n_plus == d.n_minus);
    CHECK(m.n_minus == d.n_plus);
    PdDiagram mm = mirror(m);
    CHECK(mm.to_string() == d.to_string());
}

TEST_CASE("faces count is n+2") {
    for (const char* code : {kTrefoil, k946, "[2,2,1,1]"}) {
        PdDiagram d = parse_pd(code);
        FaceStructure f = trace_faces(d);
        CHECK(f.n_faces == d.n_crossings() + 2);
    }
}
