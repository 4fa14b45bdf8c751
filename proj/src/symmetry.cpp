#include "equikh/symmetry.hpp"

#include <array>
#include <map>
#include <sstream>

namespace equikh {

namespace {

// canonical image of a crossing tuple under the edge involution phi:
// the planar reflection reverses the cyclic order and exchanges the
// over/under roles, so the image starts at the image of the incoming over
// edge. For a positive crossing (over d->b) this reads (phi b, phi a,
// phi d, phi c); for a negative one (phi d, phi c, phi b, phi a).
std::array<int, 4> image_tuple(const Crossing& c, const SymmetryAction& s) {
    auto phi = [&](int i) { return s.apply_edge(i); };
    if (c.sign > 0)
        return {phi(c.e[1]), phi(c.e[0]), phi(c.e[3]), phi(c.e[2])};
    return {phi(c.e[3]), phi(c.e[2]), phi(c.e[1]), phi(c.e[0])};
}

} // namespace

SymmetryAction trivial_symmetry() {
    SymmetryAction s;
    s.k = 0;
    s.n_edges = 0;
    return s;
}

std::optional<SymmetryAction> detect_symmetry(const PdDiagram& d) {
    if (d.n_crossings() == 0) return trivial_symmetry();
    if (!d.is_knot()) return std::nullopt;
    int n = d.n_edges;
    std::map<std::array<int, 4>, int> index;
    for (int i = 0; i < d.n_crossings(); ++i) {
        const int* e = d.crossings[i].e;
        index[{e[0], e[1], e[2], e[3]}] = i;
    }
    for (int k = 0; k < n; ++k) {
        SymmetryAction s;
        s.k = k;
        s.n_edges = n;
        bool ok = true;
        s.crossing_perm.resize(d.n_crossings());
        for (int i = 0; i < d.n_crossings() && ok; ++i) {
            auto img = image_tuple(d.crossings[i], s);
            auto it = index.find(img);
            if (it == index.end()) ok = false;
            else s.crossing_perm[i] = it->second;
        }
        if (!ok) continue;
        for (int i = 1; i <= n; ++i)
            if (s.apply_edge(i) == i) s.fixed_edges.push_back(i);
        if (s.fixed_edges.size() != 2) continue;
        s.crossing_class = classify_crossings(d, s);
        int shift = 1 - d.crossings[0].e[0];
        auto norm = [&](int e) { return ((e - 1 + shift) % n + n) % n + 1; };
        s.k_normalized = ((k + 2 * shift) % n + n) % n;
        for (int e : s.fixed_edges) s.fixed_edges_normalized.push_back(norm(e));
        std::sort(s.fixed_edges_normalized.begin(), s.fixed_edges_normalized.end());
        return s;
    }
    return std::nullopt;
}

std::vector<CrossingClass> classify_crossings(const PdDiagram& d, const SymmetryAction& s) {
    std::vector<CrossingClass> out(d.n_crossings());
    for (int i = 0; i < d.n_crossings(); ++i) {
        if (s.crossing_perm[i] != i) {
            out[i] = CrossingClass::OffAxis;
            continue;
        }
        // The reflection carries the under-strand onto the over-strand. The
        // crossing reverses orientation when the image of the incoming
        // under-edge is the outgoing over-edge, and preserves it when the
        // image is the incoming over-edge.
        const Crossing& c = d.crossings[i];
        int fa = s.apply_edge(c.e[0]);
        int over_in = c.e[c.over_in], over_out = c.e[c.over_out()];
        if (fa == over_out)
            out[i] = CrossingClass::OnAxisReversing;
        else if (fa == over_in)
            out[i] = CrossingClass::OnAxisPreserving;
        else
            throw PdError("on-axis crossing does not swap its strands");
    }
    // off-axis crossings come in pairs
    for (int i = 0; i < d.n_crossings(); ++i)
        if (s.crossing_perm[s.crossing_perm[i]] != i)
            throw PdError("crossing permutation is not an involution");
    return out;
}

PdDiagram apply_symmetry(const PdDiagram& d, const SymmetryAction& s) {
    std::ostringstream os;
    for (int i = 0; i < d.n_crossings(); ++i) {
        auto img = image_tuple(d.crossings[i], s);
        if (i) os << ",";
        os << "[" << img[0] << "," << img[1] << "," << img[2] << "," << img[3] << "]";
    }
    return parse_pd(os.str());
}

} // namespace equikh
