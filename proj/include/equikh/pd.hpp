#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equikh {

struct PdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One crossing: edge labels (a,b,c,d) counterclockwise starting from the
// incoming under-strand. The under-strand runs a -> c.
struct Crossing {
    int e[4];
    int sign = 0;         // +1 / -1
    int over_in = -1;     // slot index of the incoming over edge: 1 or 3
    int over_out() const { return over_in == 1 ? 3 : 1; }
};

struct PdDiagram {
    std::vector<Crossing> crossings;
    int n_edges = 0;
    int n_plus = 0;
    int n_minus = 0;
    // components as [start, end] label ranges (consecutive cyclic numbering)
    std::vector<std::pair<int, int>> components;

    int n_crossings() const { return (int)crossings.size(); }
    int writhe() const { return n_plus - n_minus; }
    bool is_knot() const { return components.size() == 1; }

    int component_of(int edge) const;
    // next edge label along the knot/link orientation
    int successor(int edge) const;

    std::string to_string() const;
};

// Parse a PD-code string: comma-separated bracketed 4-tuples, whitespace
// insensitive, e.g. "[11,18,12,1],[1,10,2,11]". The reserved literal
// "unknot0" denotes the crossingless unknot. Throws PdError on malformed or
// non-planar / ill-oriented input.
PdDiagram parse_pd(const std::string& text);

// Mirror image: every crossing switched (over <-> under), same projection.
PdDiagram mirror(const PdDiagram& d);

// A complete resolution of the diagram.
struct Resolution {
    std::vector<uint8_t> vertex;            // the 0/1 choice per crossing
    std::vector<std::vector<int>> circles;  // each sorted; ordered by min edge
    int n_circles() const { return (int)circles.size(); }
    int circle_of(int edge) const;
};

// Smoothing convention: the 0-resolution joins {a,b} and {c,d}; the
// 1-resolution joins {a,d} and {b,c}. For a positive crossing the
// 0-resolution is the oriented smoothing.
Resolution resolve(const PdDiagram& d, const std::vector<uint8_t>& v);

// Planar-face structure of the diagram (dart = (crossing, slot)).
// Faces are the orbits of alpha∘sigma on darts; for a genus-zero
// (planar) diagram there are n_crossings + 2 of them.
struct FaceStructure {
    // face id per dart, dart index = 4*crossing + slot
    std::vector<int> face_of_dart;
    int n_faces = 0;
};
FaceStructure trace_faces(const PdDiagram& d);

// Regions of a resolved diagram: original faces merged across each
// smoothed crossing. Returns region id per original face and, per circle,
// the pair (left region, right region) with respect to the orientation
// induced by traversing the circle along increasing edge labels... the
// "left" here is the face seen walking each dart orbit; parity data is what
// callers consume.
struct ResolvedRegions {
    std::vector<int> region_of_face;
    int n_regions = 0;
    // per edge label, the regions seen walking the edge in its base
    // orientation: left and right side
    std::vector<int> left_of_edge;
    std::vector<int> right_of_edge;
    std::vector<int> region_parity;           // nesting parity, unbounded = 0
};
ResolvedRegions resolve_regions(const PdDiagram& d, const Resolution& r,
                                const FaceStructure& f);

} // namespace equikh
