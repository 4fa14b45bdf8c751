#include "equikh/barnatan.hpp"

#include <algorithm>
#include <bit>

namespace equikh {

namespace {

int popcount32(uint32_t x) { return std::popcount(x); }

// compress a labeling mask by deleting bit p
uint32_t drop_bit(uint32_t mask, int p) {
    uint32_t low = mask & ((1u << p) - 1);
    uint32_t high = (mask >> (p + 1)) << p;
    return low | high;
}

struct EdgeMapData {
    bool is_merge;
    // merge: pi[circle of v] = circle of w; merged pair (m1, m2)
    // split: src alpha splits into target circles (tb, tg); iota maps the
    //        other circles of v to circles of w
    std::vector<int> fwd;
    int m1 = -1, m2 = -1;  // merge sources
    int alpha = -1, tb = -1, tg = -1;
};

EdgeMapData edge_map_data(const Resolution& rv, const Resolution& rw) {
    EdgeMapData md;
    if (rw.n_circles() == rv.n_circles() - 1) {
        md.is_merge = true;
        md.fwd.resize(rv.n_circles());
        std::vector<int> hits(rw.n_circles(), 0);
        for (int ci = 0; ci < rv.n_circles(); ++ci) {
            md.fwd[ci] = rw.circle_of(rv.circles[ci].front());
            hits[md.fwd[ci]]++;
        }
        for (int ci = 0; ci < rv.n_circles(); ++ci)
            if (hits[md.fwd[ci]] == 2) (md.m1 == -1 ? md.m1 : md.m2) = ci;
    } else if (rw.n_circles() == rv.n_circles() + 1) {
        md.is_merge = false;
        std::vector<int> back(rw.n_circles());
        std::vector<int> hits(rv.n_circles(), 0);
        for (int tj = 0; tj < rw.n_circles(); ++tj) {
            back[tj] = rv.circle_of(rw.circles[tj].front());
            hits[back[tj]]++;
        }
        md.fwd.assign(rv.n_circles(), -1);
        for (int tj = 0; tj < rw.n_circles(); ++tj) {
            if (hits[back[tj]] == 2) {
                md.alpha = back[tj];
                (md.tb == -1 ? md.tb : md.tg) = tj;
            } else {
                md.fwd[back[tj]] = tj;
            }
        }
        md.fwd[md.alpha] = md.tb; // iota sends alpha to the first part
    } else {
        throw PdError("edge map neither merge nor split");
    }
    return md;
}

} // namespace

uint32_t CubeComplex::gen_id(uint32_t vertex, uint32_t labeling) const {
    const Resolution& r = resolutions[vertex];
    switch (kind) {
    case CubeKind::Unreduced:
        return block_start[vertex] + labeling;
    case CubeKind::ReducedPointed: {
        int p = r.circle_of(basepoint);
        if (!((labeling >> p) & 1)) throw ComplexError("labeling outside reduced subcomplex");
        return block_start[vertex] + drop_bit(labeling, p);
    }
    case CubeKind::ReducedUnpointed:
        if (labeling & 1) throw ComplexError("unpointed labeling uses circle 0");
        return block_start[vertex] + (labeling >> 1);
    }
    throw ComplexError("bad cube kind");
}

namespace {

CubeComplex build_cube(const PdDiagram& d, CubeKind kind, int basepoint) {
    CubeComplex cube;
    cube.kind = kind;
    cube.diagram = d;
    cube.basepoint = basepoint;
    int n = d.n_crossings();
    int npos = d.n_plus, nneg = d.n_minus;

    if (n == 0) {
        // crossingless unknot
        cube.resolutions = {resolve(d, {})};
        cube.block_start = {0};
        if (kind == CubeKind::Unreduced) {
            cube.c.add_gen(0, 1);   // label 1
            cube.c.add_gen(0, -1);  // label x
            cube.vertex_of = {0, 0};
            cube.labeling_of = {0, 1};
        } else {
            cube.c.add_gen(0, kind == CubeKind::ReducedPointed ? -1 : 1);
            cube.vertex_of = {0};
            cube.labeling_of = {kind == CubeKind::ReducedPointed ? 1u : 0u};
        }
        if (kind == CubeKind::ReducedPointed) cube.c.shift_grading(0, -1);
        if (kind == CubeKind::ReducedUnpointed) cube.c.shift_grading(0, 1);
        return cube;
    }

    uint32_t nv = 1u << n;
    cube.resolutions.reserve(nv);
    cube.block_start.resize(nv);
    for (uint32_t v = 0; v < nv; ++v) {
        std::vector<uint8_t> bits(n);
        for (int i = 0; i < n; ++i) bits[i] = (v >> i) & 1;
        cube.resolutions.push_back(resolve(d, bits));
    }
    // generators
    for (uint32_t v = 0; v < nv; ++v) {
        cube.block_start[v] = (uint32_t)cube.c.size();
        const Resolution& r = cube.resolutions[v];
        int m = r.n_circles();
        int h = popcount32(v) - nneg;
        int qbase = m + popcount32(v) + npos - 2 * nneg;
        switch (kind) {
        case CubeKind::Unreduced:
            for (uint32_t L = 0; L < (1u << m); ++L) {
                cube.c.add_gen(h, qbase - 2 * popcount32(L));
                cube.vertex_of.push_back(v);
                cube.labeling_of.push_back(L);
            }
            break;
        case CubeKind::ReducedPointed: {
            int p = r.circle_of(basepoint);
            for (uint32_t Lc = 0; Lc < (1u << (m - 1)); ++Lc) {
                uint32_t L = ((Lc >> p) << (p + 1)) | (1u << p) | (Lc & ((1u << p) - 1));
                cube.c.add_gen(h, qbase - 2 * popcount32(L));
                cube.vertex_of.push_back(v);
                cube.labeling_of.push_back(L);
            }
            break;
        }
        case CubeKind::ReducedUnpointed:
            for (uint32_t S = 0; S < (1u << (m - 1)); ++S) {
                uint32_t L = S << 1;
                cube.c.add_gen(h, qbase - 2 * popcount32(L));
                cube.vertex_of.push_back(v);
                cube.labeling_of.push_back(L);
            }
            break;
        }
    }

    // differential
    for (uint32_t v = 0; v < nv; ++v) {
        const Resolution& rv = cube.resolutions[v];
        int m = rv.n_circles();
        for (int i = 0; i < n; ++i) {
            if ((v >> i) & 1) continue;
            uint32_t w = v | (1u << i);
            const Resolution& rw = cube.resolutions[w];
            EdgeMapData md = edge_map_data(rv, rw);

            uint32_t block_sz =
                (kind == CubeKind::Unreduced) ? (1u << m) : (1u << (m - 1));
            for (uint32_t idx = 0; idx < block_sz; ++idx) {
                uint32_t src = cube.block_start[v] + idx;
                uint32_t L = cube.labeling_of[src];
                if (kind != CubeKind::ReducedUnpointed) {
                    if (md.is_merge) {
                        uint32_t tl = 0;
                        for (int ci = 0; ci < m; ++ci)
                            if ((L >> ci) & 1) tl |= 1u << md.fwd[ci];
                        bool both_x = ((L >> md.m1) & 1) && ((L >> md.m2) & 1);
                        uint32_t tgt = cube.gen_id(w, tl);
                        cube.c.add_diff(src, tgt, both_x ? 1 : 0);
                    } else {
                        uint32_t base = 0;
                        for (int ci = 0; ci < m; ++ci) {
                            if (ci == md.alpha) continue;
                            if ((L >> ci) & 1) base |= 1u << md.fwd[ci];
                        }
                        if ((L >> md.alpha) & 1) {
                            cube.c.add_diff(src, cube.gen_id(w, base | (1u << md.tb) | (1u << md.tg)), 0);
                        } else {
                            cube.c.add_diff(src, cube.gen_id(w, base | (1u << md.tb)), 0);
                            cube.c.add_diff(src, cube.gen_id(w, base | (1u << md.tg)), 0);
                            cube.c.add_diff(src, cube.gen_id(w, base), 1);
                        }
                    }
                } else {
                    // unpointed reduced, basis prod_{i in S} (x_0 + x_i)
                    if (md.is_merge) {
                        if (md.fwd[0] != 0) throw ComplexError("merge moved circle 0");
                        uint32_t tl = 0;
                        int extra = 0;
                        bool dead = false;
                        for (int ci = 1; ci < m && !dead; ++ci) {
                            if (!((L >> ci) & 1)) continue;
                            int j = md.fwd[ci];
                            if (j == 0) { dead = true; break; } // y -> 0
                            if ((tl >> j) & 1) ++extra;          // y^2 = u y
                            else tl |= 1u << j;
                        }
                        if (!dead)
                            cube.c.add_diff(src, cube.gen_id(w, tl), (uint16_t)extra);
                    } else {
                        uint32_t base = 0;
                        int extra = 0;
                        for (int ci = 1; ci < m; ++ci) {
                            if (!((L >> ci) & 1) || ci == md.alpha) continue;
                            int j = md.fwd[ci];
                            base |= 1u << j;
                        }
                        auto mul_y = [&](uint32_t mask, int j, int& bump) {
                            if (j == 0) return mask; // y_0 = 0 handled by caller
                            if ((mask >> j) & 1) { ++bump; return mask; }
                            return mask | (1u << j);
                        };
                        if (md.alpha == 0) {
                            // circle 0 splits; the part with the smallest
                            // edge keeps index 0, the other part is new
                            if (md.fwd[0] != 0) throw ComplexError("split moved circle 0");
                            int other = (md.tb == 0) ? md.tg : md.tb;
                            // multiply by (y_other + u)
                            int b1 = extra;
                            uint32_t m1 = mul_y(base, other, b1);
                            cube.c.add_diff(src, cube.gen_id(w, m1), (uint16_t)b1);
                            cube.c.add_diff(src, cube.gen_id(w, base), (uint16_t)(extra + 1));
                        } else if ((L >> md.alpha) & 1) {
                            int b1 = extra;
                            uint32_t m1 = mul_y(base, md.tb, b1);
                            m1 = mul_y(m1, md.tg, b1);
                            cube.c.add_diff(src, cube.gen_id(w, m1), (uint16_t)b1);
                        } else {
                            int b1 = extra;
                            uint32_t m1 = mul_y(base, md.tb, b1);
                            cube.c.add_diff(src, cube.gen_id(w, m1), (uint16_t)b1);
                            int b2 = extra;
                            uint32_t m2 = mul_y(base, md.tg, b2);
                            cube.c.add_diff(src, cube.gen_id(w, m2), (uint16_t)b2);
                            cube.c.add_diff(src, cube.gen_id(w, base), (uint16_t)(extra + 1));
                        }
                    }
                }
            }
        }
    }

    if (kind == CubeKind::ReducedPointed) cube.c.shift_grading(0, -1);
    if (kind == CubeKind::ReducedUnpointed) cube.c.shift_grading(0, 1);
    return cube;
}

} // namespace

CubeComplex build_unreduced(const PdDiagram& d) {
    return build_cube(d, CubeKind::Unreduced, 0);
}

CubeComplex build_reduced_pointed(const PdDiagram& d, int basepoint) {
    if (d.n_crossings() > 0 && (basepoint < 1 || basepoint > d.n_edges))
        throw PdError("basepoint out of range");
    return build_cube(d, CubeKind::ReducedPointed, basepoint);
}

CubeComplex build_reduced_unpointed(const PdDiagram& d) {
    return build_cube(d, CubeKind::ReducedUnpointed, 0);
}

SparseMap unpointed_to_pointed(const CubeComplex& un, const CubeComplex& pt) {
    if (un.kind != CubeKind::ReducedUnpointed || pt.kind != CubeKind::ReducedPointed)
        throw ComplexError("unpointed_to_pointed: wrong cube kinds");
    SparseMap mu(un.c.size());
    if (un.diagram.n_crossings() == 0) {
        mu[0] = {{0, 0}};
        return mu;
    }
    for (uint32_t g = 0; g < un.c.size(); ++g) {
        uint32_t v = un.vertex_of[g];
        uint32_t S = un.labeling_of[g];
        const Resolution& r = un.resolutions[v];
        int m = r.n_circles();
        int p = r.circle_of(pt.basepoint);
        // x_p * prod_{i in S} (x_0 + x_i): expand
        int cnt = popcount32(S);
        for (uint32_t choose = 0; choose < (1u << cnt); ++choose) {
            // map the chosen subset: bit positions of S
            uint32_t maskx = 1u << p;
            int upow = 0;
            int bit = 0;
            int n_x0 = 0;
            for (int ci = 1; ci < m; ++ci) {
                if (!((S >> ci) & 1)) continue;
                bool pick_xi = (choose >> bit) & 1;
                ++bit;
                if (pick_xi) {
                    if ((maskx >> ci) & 1) ++upow; // x^2 = u x
                    else maskx |= 1u << ci;
                } else {
                    ++n_x0;
                }
            }
            // multiply in x_0^{n_x0}
            if (n_x0 > 0) {
                if (maskx & 1u) upow += n_x0;
                else { maskx |= 1u; upow += n_x0 - 1; }
            }
            chain_xor_inplace(mu[g], Chain{{pt.gen_id(v, maskx), (uint16_t)upow}});
        }
    }
    return mu;
}

Chain canonical_generator(const CubeComplex& cube, const std::vector<bool>& reverse) {
    if (cube.kind != CubeKind::Unreduced)
        throw ComplexError("canonical generators live in the unreduced complex");
    const PdDiagram& d = cube.diagram;
    if ((int)reverse.size() != std::max<std::size_t>(1, d.components.size()))
        throw ComplexError("one reversal flag per component");
    if (d.n_crossings() == 0) {
        Chain z{{cube.gen_id(0, 1), 0}};
        if (reverse[0]) chain_xor_inplace(z, Chain{{cube.gen_id(0, 0), 1}});
        return z;
    }
    // oriented resolution for this orientation
    uint32_t v = 0;
    for (int i = 0; i < d.n_crossings(); ++i) {
        const Crossing& cr = d.crossings[i];
        bool ru = reverse[d.component_of(cr.e[0])];
        bool ro = reverse[d.component_of(cr.e[cr.over_in])];
        bool same = (ru == ro);
        int oriented = (cr.sign > 0) == same ? 0 : 1;
        if (oriented) v |= 1u << i;
    }
    const Resolution& r = cube.resolutions[v];
    FaceStructure fs = trace_faces(d);
    ResolvedRegions rr = resolve_regions(d, r, fs);
    // per circle: parity of the left region w.r.t. the chosen orientation
    std::vector<int> label(r.n_circles()); // 1 = x, 0 = x + u
    for (int ci = 0; ci < r.n_circles(); ++ci) {
        int left = -1;
        for (int e : r.circles[ci]) {
            int l = reverse[d.component_of(e)] ? rr.right_of_edge[e] : rr.left_of_edge[e];
            if (left == -1) left = l;
            else if (left != l) throw ComplexError("incoherent circle orientation");
        }
        label[ci] = rr.region_parity[left] & 1;
    }
    // expand the product of labels
    std::vector<int> plus_u;
    uint32_t base = 0;
    for (int ci = 0; ci < r.n_circles(); ++ci) {
        if (label[ci]) base |= 1u << ci;
        else plus_u.push_back(ci);
    }
    Chain z;
    for (uint32_t sub = 0; sub < (1u << plus_u.size()); ++sub) {
        uint32_t mask = base;
        int upow = 0;
        for (std::size_t j = 0; j < plus_u.size(); ++j) {
            if ((sub >> j) & 1) ++upow;       // take the u * 1 part
            else mask |= 1u << plus_u[j];     // take the x part
        }
        chain_xor_inplace(z, Chain{{cube.gen_id(v, mask), (uint16_t)upow}});
    }
    if (!cube.c.apply_diff(z).empty())
        throw ComplexError("canonical generator is not a cycle");
    return z;
}

int s_invariant(const PdDiagram& d) {
    if (!d.is_knot() && d.n_crossings() > 0)
        throw PdError("s-invariant requires a knot");
    CubeComplex cube = build_reduced_pointed(d, d.n_crossings() == 0 ? 0 : 1);
    ModulePresentation pres = homology(cube.c);
    if (pres.free_gens.size() != 1)
        throw ComplexError("reduced homology free rank != 1");
    int s = pres.free_gens[0].q;
    if (pres.free_gens[0].h != 0 || s % 2 != 0)
        throw ComplexError("free generator in unexpected bigrading");
    return s;
}

void build_tau(CubeComplex& cube, const SymmetryAction& s, bool validate) {
    const PdDiagram& d = cube.diagram;
    int n = d.n_crossings();
    if (n == 0) {
        SparseMap t(cube.c.size());
        for (uint32_t g = 0; g < cube.c.size(); ++g) t[g] = {{g, 0}};
        cube.c.endos["tau"] = t;
        return;
    }
    if (cube.kind == CubeKind::ReducedPointed &&
        std::find(s.fixed_edges.begin(), s.fixed_edges.end(), cube.basepoint) ==
            s.fixed_edges.end())
        throw ComplexError("equivariant reduced complex needs a fixed basepoint");
    SparseMap t(cube.c.size());
    for (uint32_t g = 0; g < cube.c.size(); ++g) {
        uint32_t v = cube.vertex_of[g];
        uint32_t w = 0;
        for (int i = 0; i < n; ++i)
            if ((v >> i) & 1) w |= 1u << s.crossing_perm[i];
        const Resolution& rv = cube.resolutions[v];
        const Resolution& rw = cube.resolutions[w];
        int m = rv.n_circles();
        std::vector<int> cmap(m);
        for (int ci = 0; ci < m; ++ci)
            cmap[ci] = rw.circle_of(s.apply_edge(rv.circles[ci].front()));
        uint32_t L = cube.labeling_of[g];
        if (cube.kind != CubeKind::ReducedUnpointed) {
            uint32_t tl = 0;
            for (int ci = 0; ci < m; ++ci)
                if ((L >> ci) & 1) tl |= 1u << cmap[ci];
            t[g] = {{cube.gen_id(w, tl), 0}};
        } else {
            // y_i -> y_{cmap(0)} + y_{cmap(i)}; expand the product
            int j0 = cmap[0];
            std::vector<std::pair<uint32_t, uint16_t>> cur = {{0u, 0}};
            for (int ci = 1; ci < m; ++ci) {
                if (!((L >> ci) & 1)) continue;
                int ji = cmap[ci];
                std::vector<std::pair<uint32_t, uint16_t>> next;
                auto mul = [&](uint32_t mask, uint16_t e, int j) {
                    if (j == 0) return; // y_0 = 0
                    if ((mask >> j) & 1) next.push_back({mask, (uint16_t)(e + 1)});
                    else next.push_back({mask | (1u << j), e});
                };
                for (auto& [mask, e] : cur) {
                    mul(mask, e, j0);
                    mul(mask, e, ji);
                }
                cur = std::move(next);
            }
            Chain out;
            for (auto& [mask, e] : cur)
                chain_xor_inplace(out, Chain{{cube.gen_id(w, mask), e}});
            t[g] = out;
        }
    }
    cube.c.endos["tau"] = t;
    if (validate) cube.c.validate_endo("tau", /*involution=*/true);
}

} // namespace equikh
