#include "equikh/pd.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace equikh {

int PdDiagram::component_of(int edge) const {
    for (int i = 0; i < (int)components.size(); ++i)
        if (edge >= components[i].first && edge <= components[i].second) return i;
    throw PdError("edge label out of range");
}

int PdDiagram::successor(int edge) const {
    auto [lo, hi] = components[component_of(edge)];
    return edge == hi ? lo : edge + 1;
}

std::string PdDiagram::to_string() const {
    if (crossings.empty()) return "unknot0";
    std::ostringstream os;
    for (std::size_t i = 0; i < crossings.size(); ++i) {
        if (i) os << ",";
        os << "[" << crossings[i].e[0] << "," << crossings[i].e[1] << ","
           << crossings[i].e[2] << "," << crossings[i].e[3] << "]";
    }
    return os.str();
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) { p[x] = p[p[x]]; x = p[x]; }
        return x;
    }
    void unite(int x, int y) { p[find(x)] = find(y); }
};

std::vector<std::vector<int>> tuple_lists(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == ',')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '[') throw PdError("expected '[' in PD code");
        ++i;
        std::vector<int> tup;
        std::string num;
        while (i < text.size() && text[i] != ']') {
            char c = text[i];
            if (std::isdigit((unsigned char)c)) num += c;
            else if (c == ',' || std::isspace((unsigned char)c)) {
                if (!num.empty()) { tup.push_back(std::stoi(num)); num.clear(); }
            } else throw PdError("unexpected character in PD tuple");
            ++i;
        }
        if (i == text.size()) throw PdError("unterminated PD tuple");
        if (!num.empty()) tup.push_back(std::stoi(num));
        if (tup.size() != 4) throw PdError("PD tuple must have 4 entries");
        out.push_back(tup);
        ++i;
        skip_ws();
    }
    if (out.empty()) throw PdError("empty PD code");
    return out;
}

} // namespace

PdDiagram parse_pd(const std::string& text) {
    // trim
    std::string t;
    for (char c : text)
        if (!std::isspace((unsigned char)c)) t += c;
    PdDiagram d;
    if (t == "unknot0") {
        d.n_edges = 0;
        d.components = {};
        return d;
    }
    auto tups = tuple_lists(text);
    int n = (int)tups.size();
    d.crossings.resize(n);
    d.n_edges = 2 * n;
    std::vector<int> count(d.n_edges + 1, 0);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) {
            int e = tups[i][s];
            if (e < 1 || e > d.n_edges) throw PdError("edge label out of range 1..2n");
            d.crossings[i].e[s] = e;
            ++count[e];
        }
    for (int e = 1; e <= d.n_edges; ++e)
        if (count[e] != 2) throw PdError("edge label must appear exactly twice");

    // components: union edges through crossings (a~c, b~d), then check each
    // class is a consecutive label interval
    UnionFind uf(d.n_edges + 1);
    for (auto& c : d.crossings) {
        uf.unite(c.e[0], c.e[2]);
        uf.unite(c.e[1], c.e[3]);
    }
    std::map<int, std::pair<int, int>> span;
    for (int e = 1; e <= d.n_edges; ++e) {
        int r = uf.find(e);
        auto it = span.find(r);
        if (it == span.end()) span[r] = {e, e};
        else {
            it->second.first = std::min(it->second.first, e);
            it->second.second = std::max(it->second.second, e);
        }
    }
    std::vector<std::pair<int, int>> comps;
    for (auto& [root, se] : span) comps.push_back(se);
    std::sort(comps.begin(), comps.end());
    int expect = 1;
    for (auto [lo, hi] : comps) {
        if (lo != expect) throw PdError("component labels not consecutive");
        expect = hi + 1;
    }
    if (expect != d.n_edges + 1) throw PdError("component labels not consecutive");
    d.components = comps;

    // orient: slot 0 = in, slot 2 = out; propagate over slots
    // end state per edge: which of its two occurrences is the in-end
    struct Occ { int cr, slot; };
    std::vector<std::vector<Occ>> occ(d.n_edges + 1);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossings[i].e[s]].push_back({i, s});

    // dir[4*cr+slot]: +1 in, -1 out, 0 unknown
    std::vector<int> dir(4 * n, 0);
    auto set_dir = [&](int cr, int slot, int v) {
        int& cur = dir[4 * cr + slot];
        if (cur != 0 && cur != v) throw PdError("inconsistent orientation");
        if (cur != 0) return false;
        cur = v;
        return true;
    };
    for (int i = 0; i < n; ++i) {
        set_dir(i, 0, +1);
        set_dir(i, 2, -1);
        if (d.crossings[i].e[2] != d.successor(d.crossings[i].e[0]))
            throw PdError("under-strand breaks edge numbering (c != successor(a))");
    }
    bool changed = true;
    auto propagate = [&] {
        changed = true;
        while (changed) {
            changed = false;
            for (int e = 1; e <= d.n_edges; ++e) {
                auto& o = occ[e];
                int d0 = dir[4 * o[0].cr + o[0].slot];
                int d1 = dir[4 * o[1].cr + o[1].slot];
                if (d0 != 0 && d1 == 0) { changed |= set_dir(o[1].cr, o[1].slot, -d0); }
                else if (d1 != 0 && d0 == 0) { changed |= set_dir(o[0].cr, o[0].slot, -d1); }
                else if (d0 != 0 && d1 != 0 && d0 == d1)
                    throw PdError("edge oriented inconsistently");
            }
            // the over pair of each crossing has one incoming and one
            // outgoing end
            for (int i = 0; i < n; ++i) {
                int b = dir[4 * i + 1], dd = dir[4 * i + 3];
                if (b != 0 && dd == 0) changed |= set_dir(i, 3, -b);
                else if (dd != 0 && b == 0) changed |= set_dir(i, 1, -dd);
                else if (b != 0 && dd != 0 && b == dd)
                    throw PdError("over strand oriented inconsistently");
            }
        }
    };
    propagate();
    // remaining unknowns: over-over components; resolve by successor, with a
    // deterministic choice where both directions close up
    for (int i = 0; i < n; ++i) {
        if (dir[4 * i + 1] != 0) continue;
        int b = d.crossings[i].e[1], dd = d.crossings[i].e[3];
        bool bin = (d.successor(b) == dd);
        bool din = (d.successor(dd) == b);
        if (bin && !din) set_dir(i, 1, +1);
        else if (din && !bin) set_dir(i, 3, +1);
        else if (bin && din) set_dir(i, 3, +1); // free choice: take d incoming
        else throw PdError("over-strand breaks edge numbering");
        propagate();
    }
    for (int e = 1; e <= d.n_edges; ++e) {
        auto& o = occ[e];
        if (dir[4 * o[0].cr + o[0].slot] + dir[4 * o[1].cr + o[1].slot] != 0)
            throw PdError("edge lacks one in-end and one out-end");
    }
    for (int i = 0; i < n; ++i) {
        Crossing& c = d.crossings[i];
        c.over_in = dir[4 * i + 1] == +1 ? 1 : 3;
        int oin = c.e[c.over_in], oout = c.e[c.over_out()];
        if (d.successor(oin) != oout) throw PdError("over-strand breaks edge numbering");
        // sign: over running d->b is positive, b->d negative
        c.sign = (c.over_in == 3) ? +1 : -1;
        (c.sign > 0 ? d.n_plus : d.n_minus)++;
    }

    // planarity: faces of the 4-valent map must number n + 2 (connected)
    FaceStructure fs = trace_faces(d);
    if (fs.n_faces != n + 2) throw PdError("non-planar or split PD code");
    return d;
}

PdDiagram mirror(const PdDiagram& d) {
    if (d.crossings.empty()) return d;
    std::ostringstream os;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        int r = c.over_in; // rotate so the old incoming over edge leads
        if (i) os << ",";
        os << "[" << c.e[r] << "," << c.e[(r + 1) % 4] << "," << c.e[(r + 2) % 4]
           << "," << c.e[(r + 3) % 4] << "]";
    }
    return parse_pd(os.str());
}

int Resolution::circle_of(int edge) const {
    for (int i = 0; i < (int)circles.size(); ++i)
        if (std::binary_search(circles[i].begin(), circles[i].end(), edge)) return i;
    throw PdError("edge not found in resolution");
}

Resolution resolve(const PdDiagram& d, const std::vector<uint8_t>& v) {
    if ((int)v.size() != d.n_crossings()) throw PdError("resolution vector has wrong length");
    Resolution r;
    r.vertex = v;
    if (d.n_crossings() == 0) {
        r.circles = {{}}; // crossingless unknot: one circle, no edges
        return r;
    }
    UnionFind uf(d.n_edges + 1);
    for (int i = 0; i < d.n_crossings(); ++i) {
        const int* e = d.crossings[i].e;
        if (v[i] == 0) { uf.unite(e[0], e[1]); uf.unite(e[2], e[3]); }
        else           { uf.unite(e[0], e[3]); uf.unite(e[1], e[2]); }
    }
    std::map<int, std::vector<int>> cls;
    for (int e = 1; e <= d.n_edges; ++e) cls[uf.find(e)].push_back(e);
    for (auto& [root, edges] : cls) r.circles.push_back(edges);
    std::sort(r.circles.begin(), r.circles.end(),
              [](auto& a, auto& b) { return a.front() < b.front(); });
    return r;
}

FaceStructure trace_faces(const PdDiagram& d) {
    int n = d.n_crossings();
    FaceStructure fs;
    fs.face_of_dart.assign(4 * n, -1);
    // alpha: other occurrence of the same edge
    std::vector<int> alpha(4 * n, -1);
    std::vector<std::vector<int>> occ(d.n_edges + 1);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossings[i].e[s]].push_back(4 * i + s);
    for (int e = 1; e <= d.n_edges; ++e) {
        alpha[occ[e][0]] = occ[e][1];
        alpha[occ[e][1]] = occ[e][0];
    }
    auto next = [&](int dart) {
        int cr = dart / 4, s = dart % 4;
        return alpha[4 * cr + ((s + 1) % 4)];
    };
    for (int start = 0; start < 4 * n; ++start) {
        if (fs.face_of_dart[start] != -1) continue;
        int f = fs.n_faces++;
        int cur = start;
        do {
            fs.face_of_dart[cur] = f;
            cur = next(cur);
        } while (cur != start);
    }
    return fs;
}

ResolvedRegions resolve_regions(const PdDiagram& d, const Resolution& r,
                                const FaceStructure& f) {
    ResolvedRegions rr;
    int n = d.n_crossings();
    if (n == 0) {
        // crossingless unknot: two regions; the inner one on the left for
        // the base orientation
        rr.n_regions = 2;
        rr.region_of_face = {0, 1};
        rr.left_of_edge = {1};
        rr.right_of_edge = {0};
        rr.region_parity = {0, 1};
        return rr;
    }
    UnionFind uf(f.n_faces);
    for (int i = 0; i < n; ++i) {
        // the middle region of the smoothing merges the two opposite sectors
        if (r.vertex[i] == 0)
            uf.unite(f.face_of_dart[4 * i + 1], f.face_of_dart[4 * i + 3]);
        else
            uf.unite(f.face_of_dart[4 * i + 0], f.face_of_dart[4 * i + 2]);
    }
    std::map<int, int> reg_id;
    rr.region_of_face.resize(f.n_faces);
    for (int i = 0; i < f.n_faces; ++i) {
        int root = uf.find(i);
        auto it = reg_id.find(root);
        if (it == reg_id.end()) it = reg_id.insert({root, rr.n_regions++}).first;
        rr.region_of_face[i] = it->second;
    }
    if (rr.n_regions != r.n_circles() + 1)
        throw PdError("resolved region count mismatch (face convention)");

    // left region of each circle, walking each edge toward its in-end dart
    std::vector<std::vector<int>> occ(d.n_edges + 1);
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) occ[d.crossings[i].e[s]].push_back(4 * i + s);
    auto is_in_dart = [&](int dart) {
        int cr = dart / 4, s = dart % 4;
        const Crossing& c = d.crossings[cr];
        if (s == 0) return true;
        if (s == 2) return false;
        return s == c.over_in;
    };
    rr.left_of_edge.assign(d.n_edges + 1, -1);
    rr.right_of_edge.assign(d.n_edges + 1, -1);
    for (int e = 1; e <= d.n_edges; ++e) {
        for (int dart : occ[e]) {
            if (!is_in_dart(dart)) continue;
            int cr = dart / 4, s = dart % 4;
            rr.left_of_edge[e] = rr.region_of_face[f.face_of_dart[4 * cr + s]];
            rr.right_of_edge[e] = rr.region_of_face[f.face_of_dart[4 * cr + ((s + 3) % 4)]];
        }
    }
    // per circle the edges must all see the same two sides (possibly swapped
    // when an edge runs against the circle's traversal direction)
    std::vector<std::pair<int, int>> side_pair(r.n_circles(), {-1, -1});
    for (int ci = 0; ci < r.n_circles(); ++ci) {
        for (int e : r.circles[ci]) {
            int lf = rr.left_of_edge[e], rf = rr.right_of_edge[e];
            if (side_pair[ci].first == -1) side_pair[ci] = {std::min(lf, rf), std::max(lf, rf)};
            else if (side_pair[ci] != std::make_pair(std::min(lf, rf), std::max(lf, rf)))
                throw PdError("inconsistent circle sides (face convention)");
        }
    }

    // nesting parity: regions form a tree with one edge per circle
    std::vector<std::vector<int>> adj(rr.n_regions);
    for (int ci = 0; ci < r.n_circles(); ++ci) {
        adj[side_pair[ci].first].push_back(side_pair[ci].second);
        adj[side_pair[ci].second].push_back(side_pair[ci].first);
    }
    // unbounded region: the one on the outgoing side of the maximal edge
    int max_e = d.n_edges;
    int unb = -1;
    for (int dart : occ[max_e])
        if (!is_in_dart(dart)) {
            int cr = dart / 4, s = dart % 4;
            unb = rr.region_of_face[f.face_of_dart[4 * cr + s]];
        }
    rr.region_parity.assign(rr.n_regions, -1);
    std::vector<int> stack = {unb};
    rr.region_parity[unb] = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : adj[x])
            if (rr.region_parity[y] == -1) {
                rr.region_parity[y] = rr.region_parity[x] ^ 1;
                stack.push_back(y);
            }
    }
    for (int p : rr.region_parity)
        if (p == -1) throw PdError("disconnected region structure");
    return rr;
}

} // namespace equikh
