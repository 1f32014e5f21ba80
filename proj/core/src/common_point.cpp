#include "trifree/common_point.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace trifree {

namespace {

// Segment side along K2: segment t lies between crossings t and t+1 (with
// the path endpoints at the extremes).  Labels alternate starting inside;
// only the drawn sides of the end segments may differ from their labels.
bool drawn_inside(const PathPairPattern& p, int seg, int nseg) {
    if (seg == 0) return p.end_v_inside;
    if (seg == nseg - 1) return p.end_u_inside;
    return seg % 2 == 0;
}

}  // namespace

PlaneGraph pattern_embedding(const PathPairPattern& p, int order_at_first,
                             int order_at_last) {
    const int r = static_cast<int>(p.crossings.size());
    const int nseg = r + 1;
    // vertex ids: endpoints and dummies first, then K1 internals, then the
    // K2 internals that are not crossings.
    std::vector<std::string> names;
    auto fresh = [&](const std::string& n) {
        names.push_back(n);
        return static_cast<int>(names.size()) - 1;
    };

    int U1, V1, U2, V2;
    std::vector<Vertex> outer;
    if (p.same_endpoints) {
        U1 = U2 = fresh("u");
        int d1 = fresh("d1");
        V1 = V2 = fresh("v");
        int d2 = fresh("d2");
        outer = {U1, d1, V1, d2};
    } else {
        U1 = fresh("u1");
        int d1 = fresh("d1");
        V2 = fresh("v2");
        int d2 = fresh("d2");
        V1 = fresh("v1");
        int d3 = fresh("d3");
        U2 = fresh("u2");
        int d4 = fresh("d4");
        outer = {U1, d1, V2, d2, V1, d3, U2, d4};
    }

    std::vector<Vertex> a(p.k1 + 1, -1), b(p.k2 + 1, -1);
    a[0] = U1;
    a[p.k1] = V1;
    b[0] = V2;
    b[p.k2] = U2;
    std::map<int, int> cross_at_i, cross_at_j;  // position -> crossing index
    for (int t = 0; t < r; ++t) {
        auto [i, j] = p.crossings[t];
        Vertex x = fresh("x" + std::to_string(t));
        a[i] = x;
        b[j] = x;
        cross_at_i[i] = t;
        cross_at_j[j] = t;
    }
    for (int i = 1; i < p.k1; ++i)
        if (a[i] < 0) a[i] = fresh("a" + std::to_string(i));
    for (int j = 1; j < p.k2; ++j)
        if (b[j] < 0) b[j] = fresh("b" + std::to_string(j));

    const int n = static_cast<int>(names.size());
    std::vector<std::vector<Vertex>> rot(n);

    // dummies: plain degree-2 outer vertices
    for (size_t i = 0; i < outer.size(); i += 2) {
        Vertex d = outer[(i + 1) % outer.size()];
        rot[d] = {outer[i], outer[(i + 2) % outer.size()]};
    }

    auto outer_next = [&](Vertex v) {
        for (size_t i = 0; i < outer.size(); ++i)
            if (outer[i] == v) return outer[(i + 1) % outer.size()];
        return Vertex(-1);
    };
    auto outer_prev = [&](Vertex v) {
        for (size_t i = 0; i < outer.size(); ++i)
            if (outer[i] == v) return outer[(i + outer.size() - 1) % outer.size()];
        return Vertex(-1);
    };

    if (p.same_endpoints) {
        // At u: clockwise [next, inside fan, K1, outside fan, prev];
        // at v: clockwise [next, outside fan, K1, inside fan, prev].
        if (p.end_u_inside)
            rot[U1] = {outer_next(U1), b[p.k2 - 1], a[1], outer_prev(U1)};
        else
            rot[U1] = {outer_next(U1), a[1], b[p.k2 - 1], outer_prev(U1)};
        if (p.end_v_inside)
            rot[V1] = {outer_next(V1), a[p.k1 - 1], b[1], outer_prev(V1)};
        else
            rot[V1] = {outer_next(V1), b[1], a[p.k1 - 1], outer_prev(V1)};
    } else {
        rot[U1] = {outer_next(U1), a[1], outer_prev(U1)};
        rot[V1] = {outer_next(V1), a[p.k1 - 1], outer_prev(V1)};
        rot[V2] = {outer_next(V2), b[1], outer_prev(V2)};
        rot[U2] = {outer_next(U2), b[p.k2 - 1], outer_prev(U2)};
    }

    // K1 plain internals
    for (int i = 1; i < p.k1; ++i)
        if (!cross_at_i.count(i)) rot[a[i]] = {a[i - 1], a[i + 1]};
    // K2 plain internals
    for (int j = 1; j < p.k2; ++j)
        if (!cross_at_j.count(j)) rot[b[j]] = {b[j - 1], b[j + 1]};

    // Crossings: clockwise [K1 next, outside edge, K1 prev, inside edge];
    // when both K2 edges are drawn on one side the two local orders are
    // distinguished by order_at_first / order_at_last.
    for (int t = 0; t < r; ++t) {
        auto [i, j] = p.crossings[t];
        Vertex k1n = a[i + 1], k1p = a[i - 1];
        Vertex lo = b[j - 1], hi = b[j + 1];
        bool lo_in = drawn_inside(p, t, nseg);
        bool hi_in = drawn_inside(p, t + 1, nseg);
        Vertex x = a[i];
        if (lo_in != hi_in) {
            Vertex in_e = lo_in ? lo : hi;
            Vertex out_e = lo_in ? hi : lo;
            rot[x] = {k1n, out_e, k1p, in_e};
        } else {
            int flip = (t == 0 ? order_at_first : order_at_last) & 1;
            Vertex e1 = flip ? hi : lo, e2 = flip ? lo : hi;
            if (lo_in)
                rot[x] = {k1n, k1p, e1, e2};
            else
                rot[x] = {k1n, e1, e2, k1p};
        }
    }

    PlaneGraph g;
    g.name = names;
    g.rot = rot;
    g.outer = outer;
    g.triangle_free = true;
    validate(g);
    return g;
}

namespace {

bool is_dummyless_path_cycle(const PlaneGraph& g, const std::vector<Vertex>& cyc) {
    for (Vertex v : cyc)
        if (g.name[v][0] == 'd') return false;
    return true;
}

PatternClass classify_pattern(const PathPairPattern& p, const PlaneGraph& aux) {
    if (p.crossings.size() == 1) return PatternClass::CommonPoint;
    if (p.same_endpoints && p.end_v_inside == p.end_u_inside)
        return PatternClass::NotKind11;
    for (const CycleInfo& c : cycles_up_to(aux, 4)) {
        if (c.cycle.size() != 4 || !is_dummyless_path_cycle(aux, c.cycle))
            continue;
        if (!c.facial) return PatternClass::Nonfacial4Cycle;
    }
    return PatternClass::Counterexample;
}

// A facial pure-path 4-cycle means the 4-face reroute applies in any host
// whose 4-cycles bound faces, so the pattern is reducible.
bool has_facial_reroute(const PlaneGraph& aux) {
    for (const CycleInfo& c : cycles_up_to(aux, 4)) {
        if (c.cycle.size() != 4 || !is_dummyless_path_cycle(aux, c.cycle))
            continue;
        if (c.facial) return true;
    }
    return false;
}

}  // namespace

std::vector<ClassifiedPattern> enumerate_irreducible(int max_k1, int max_k2,
                                                     bool same_endpoints) {
    std::vector<ClassifiedPattern> out;
    std::set<std::string> seen;

    auto consider = [&](const PathPairPattern& p, int of, int ol) {
        PlaneGraph aux;
        try {
            aux = pattern_embedding(p, of, ol);
        } catch (const GraphError&) {
            return;  // not planar / not simple / triangle: no such pattern
        }
        if (has_facial_reroute(aux)) return;
        std::string key = canonical_form(aux);
        if (!seen.insert(key).second) return;
        ClassifiedPattern cp;
        cp.pattern = p;
        cp.cls = classify_pattern(p, aux);
        cp.canonical = key;
        out.push_back(std::move(cp));
    };

    // Unordered pairs: representatives have |K1| >= |K2|.  Shared-endpoint
    // enumeration targets the exact lengths asked for (the lemma's second
    // case is |K1| = |K2| = 7).
    for (int k1 = 2; k1 <= max_k1; ++k1) {
        for (int k2 = 2; k2 <= std::min(k1, max_k2); ++k2) {
            if (same_endpoints && (k1 != max_k1 || k2 != max_k2)) continue;
            int rmax = std::min(k1, k2) - 1;
            for (int r = 1; r <= rmax; r += 2) {
                // choose j positions ascending and i positions as any
                // injective assignment
                std::vector<int> js(r), is(r);
                auto pick_i = [&](auto&& self, int t, unsigned used) -> void {
                    if (t == r) {
                        PathPairPattern p;
                        p.k1 = k1;
                        p.k2 = k2;
                        p.same_endpoints = same_endpoints;
                        for (int s = 0; s < r; ++s)
                            p.crossings.push_back({is[s], js[s]});
                        p.tags.assign(k2, 1);
                        for (int e = 0; e < k2; ++e) {
                            int seg = 0;
                            for (int s = 0; s < r; ++s)
                                if (js[s] <= e) seg = s + 1;
                            p.tags[e] = seg % 2 == 0 ? 0 : 1;
                        }
                        if (!same_endpoints) {
                            consider(p, 0, 0);
                        } else {
                            for (int bv = 0; bv < 2; ++bv)
                                for (int bu = 0; bu < 2; ++bu) {
                                    p.end_v_inside = bv;
                                    p.end_u_inside = bu;
                                    for (int of = 0; of < 2; ++of)
                                        for (int ol = 0; ol < 2; ++ol)
                                            consider(p, of, ol);
                                }
                        }
                        return;
                    }
                    for (int i = 1; i < k1; ++i) {
                        if (used & (1u << i)) continue;
                        is[t] = i;
                        self(self, t + 1, used | (1u << i));
                    }
                };
                auto pick_j = [&](auto&& self, int t, int from) -> void {
                    if (t == r) {
                        pick_i(pick_i, 0, 0);
                        return;
                    }
                    for (int j = from; j < k2; ++j) {
                        js[t] = j;
                        self(self, t + 1, j + 1);
                    }
                };
                pick_j(pick_j, 0, 1);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reductions on the tag-level view.

namespace {

struct Item {
    int i = 0, j = 0;  // crossing coordinates
};

struct View {
    int k1, k2;
    std::vector<Item> items;   // ascending j
    std::vector<int> tags;     // per K2 edge: 0 in, 1 out, 2 shared
};

View to_view(const PathPairPattern& p) {
    View v{p.k1, p.k2, {}, p.tags};
    for (auto [i, j] : p.crossings) v.items.push_back({i, j});
    if (v.tags.empty()) {
        v.tags.assign(p.k2, 1);
        for (int e = 0; e < p.k2; ++e) {
            int seg = 0;
            for (size_t s = 0; s < v.items.size(); ++s)
                if (v.items[s].j <= e) seg = static_cast<int>(s) + 1;
            v.tags[e] = seg % 2 == 0 ? 0 : 1;
        }
    }
    return v;
}

PathPairPattern from_view(const View& v, const PathPairPattern& base) {
    PathPairPattern p = base;
    p.k1 = v.k1;
    p.k2 = v.k2;
    p.crossings.clear();
    for (const Item& it : v.items) p.crossings.push_back({it.i, it.j});
    p.tags = v.tags;
    return p;
}

// Shared-edge split: the first shared edge inherits the side of its
// predecessor (inside at the v2 end by convention) and its lower crossing
// leaves the intersection.
bool op_shared(View& v) {
    for (int e = 0; e < v.k2; ++e) {
        if (v.tags[e] != 2) continue;
        int side = e == 0 ? 0 : (v.tags[e - 1] == 2 ? 0 : v.tags[e - 1]);
        v.tags[e] = side;
        for (size_t s = 0; s < v.items.size(); ++s)
            if (v.items[s].j == e) { v.items.erase(v.items.begin() + s); break; }
        return true;
    }
    return false;
}

// Same-side split: a crossing with equal tags on both sides is eliminated.
bool op_same_side(View& v) {
    for (size_t s = 0; s < v.items.size(); ++s) {
        int j = v.items[s].j;
        if (j <= 0 || j >= v.k2) continue;
        if (v.tags[j - 1] == v.tags[j] && v.tags[j] != 2) {
            v.items.erase(v.items.begin() + s);
            return true;
        }
    }
    return false;
}

// 4-face reroute between crossings consecutive on K1.
bool op_reroute(View& v) {
    std::vector<size_t> order(v.items.size());
    for (size_t s = 0; s < order.size(); ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return v.items[x].i < v.items[y].i;
    });
    for (size_t t = 0; t + 1 < order.size(); ++t) {
        Item& lo = v.items[order[t]];
        Item& hi = v.items[order[t + 1]];
        int d1 = hi.i - lo.i;
        int d2 = std::abs(hi.j - lo.j);
        bool j_clean = true;
        for (const Item& it : v.items)
            if (it.j > std::min(lo.j, hi.j) && it.j < std::max(lo.j, hi.j))
                j_clean = false;
        if (!j_clean || d1 + d2 != 4) continue;
        if (d1 == 2 && d2 == 2) {
            // swap the two subpaths: both crossings become same-side
            int jl = std::min(lo.j, hi.j);
            int side = v.tags[jl];
            v.tags[jl] = v.tags[jl + 1] = side;  // segment between them flips
            // after swapping, both crossings are same-sided: drop them
            size_t a = order[t], b = order[t + 1];
            if (a < b) std::swap(a, b);
            v.items.erase(v.items.begin() + a);
            v.items.erase(v.items.begin() + b);
            return true;
        }
        // (1,3) or (3,1): replace the longer subpath by the shorter one,
        // shortening that path by 2.
        if (d2 == 3) {
            int jl = std::min(lo.j, hi.j);
            v.tags.erase(v.tags.begin() + jl, v.tags.begin() + jl + 2);
            v.k2 -= 2;
            for (Item& it : v.items)
                if (it.j > jl) it.j -= 2;
            // the replacing edge is shared; the next pass dissolves it
            v.tags[jl] = 2;
            return true;
        }
        if (d1 == 3) {
            int il = lo.i;
            v.k1 -= 2;
            for (Item& it : v.items)
                if (it.i > il) it.i -= 2;
            int jl = std::min(lo.j, hi.j);
            v.tags[jl] = 2;
            return true;
        }
    }
    return false;
}

}  // namespace

PathPairPattern reduce(const PathPairPattern& p) {
    View v = to_view(p);
    for (;;) {
        if (op_shared(v)) continue;
        if (op_same_side(v)) continue;
        if (op_reroute(v)) continue;
        break;
    }
    return from_view(v, p);
}

}  // namespace trifree
