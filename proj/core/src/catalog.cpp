#include "trifree/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "trifree/constraints.hpp"
#include "trifree/systems.hpp"

namespace trifree {

namespace {

// Incremental face-list builder with adjacency tracking so region fills can
// probe chord placements before committing.
struct Build {
    std::vector<std::string> names;
    std::vector<std::vector<Vertex>> internal;
    std::vector<Vertex> outer;
    std::set<std::pair<Vertex, Vertex>> edges;
    int next = 0;

    Vertex fresh(const std::string& base) {
        names.push_back(base);
        return next++;
    }
    void start_outer(int n) {
        for (int i = 0; i < n; ++i) outer.push_back(fresh("c" + std::to_string(i + 1)));
        for (int i = 0; i < n; ++i) note_edge(outer[i], outer[(i + 1) % n]);
    }
    Vertex c(int i) const { return outer[(i - 1) % outer.size()]; }  // 1-based

    bool has_edge(Vertex a, Vertex b) const {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    }
    bool triangle_with(Vertex a, Vertex b) const {
        for (Vertex x = 0; x < next; ++x)
            if (x != a && x != b && has_edge(x, a) && has_edge(x, b)) return true;
        return false;
    }
    void note_edge(Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); }

    void face(const std::vector<Vertex>& walk) {
        for (size_t i = 0; i < walk.size(); ++i)
            note_edge(walk[i], walk[(i + 1) % walk.size()]);
        internal.push_back(walk);
    }
    // Path a .. b with len-1 fresh internal vertices (len >= 1).
    std::vector<Vertex> chain(Vertex a, Vertex b, int len, const std::string& base) {
        if (len < 1) throw std::invalid_argument("chain length must be >= 1");
        std::vector<Vertex> p{a};
        for (int t = 1; t < len; ++t) p.push_back(fresh(base + std::to_string(t)));
        p.push_back(b);
        return p;
    }

    // Quadrangulate a region, trying boundary rotations of the ladder (and a
    // fan) until no chord collides with existing edges.
    void fill(const std::vector<Vertex>& boundary, const std::string& style) {
        const int len = static_cast<int>(boundary.size());
        if (len % 2 != 0) throw GraphError("odd region in catalog template");
        if (len == 4) {
            face(boundary);
            return;
        }
        std::set<std::pair<Vertex, Vertex>> boundary_edges;
        for (int i = 0; i < len; ++i) {
            Vertex a = boundary[i], b = boundary[(i + 1) % len];
            boundary_edges.insert({std::min(a, b), std::max(a, b)});
        }
        auto try_faces = [&](const std::vector<std::vector<Vertex>>& fcs) {
            std::set<std::pair<Vertex, Vertex>> fresh_edges;
            for (const auto& f : fcs)
                for (size_t i = 0; i < f.size(); ++i) {
                    Vertex a = f[i], b = f[(i + 1) % f.size()];
                    auto key = std::make_pair(std::min(a, b), std::max(a, b));
                    if (boundary_edges.count(key) || fresh_edges.count(key)) continue;
                    // a chord coinciding with an existing edge would give it
                    // a third incident face
                    if (edges.count(key)) return false;
                    if (triangle_with(a, b)) return false;
                    fresh_edges.insert(key);
                }
            for (const auto& f : fcs) face(f);
            return true;
        };
        std::vector<std::string> styles =
            style == "fan" ? std::vector<std::string>{"fan", "ladder"}
                           : std::vector<std::string>{"ladder", "fan"};
        for (const std::string& st : styles) {
            for (int off = 0; off < len; ++off) {
                std::vector<Vertex> rot;
                for (int t = 0; t < len; ++t) rot.push_back(boundary[(off + t) % len]);
                std::vector<std::vector<Vertex>> fcs;
                int saved = next;
                size_t saved_names = names.size();
                if (st == "fan")
                    fill_region(rot, "fan", fcs, next, &names);
                else
                    fill_region(rot, "ladder", fcs, next, &names);
                if (try_faces(fcs)) return;
                next = saved;
                names.resize(saved_names);
            }
        }
        throw GraphError("no conflict-free quadrangulation found for region");
    }

    PlaneGraph finish(bool triangle_free = true) {
        PlaneGraph g = from_faces(outer, internal, next, names);
        g.triangle_free = triangle_free;
        validate(g);
        return g;
    }
};

int seg(const FamilySpec& s, const std::string& key, int dflt) {
    auto it = s.segments.find(key);
    return it == s.segments.end() ? dflt : it->second;
}

// --- families ---------------------------------------------------------------

PlaneGraph build_quad6(const FamilySpec& s) {
    Build b;
    b.start_outer(6);
    b.fill(b.outer, s.fill_style("disk"));
    return b.finish();
}

PlaneGraph build_7a(const FamilySpec&) {
    Build b;
    b.start_outer(7);
    b.face({b.c(1), b.c(2), b.c(3), b.c(4), b.c(5)});
    b.face({b.c(5), b.c(6), b.c(7), b.c(1)});
    return b.finish();
}

PlaneGraph build_7b(const FamilySpec& s) {
    Build b;
    b.start_outer(7);
    Vertex v = b.fresh("v");
    b.face({b.c(1), b.c(2), b.c(3), b.c(4), v});
    b.fill({b.c(4), b.c(5), b.c(6), b.c(7), b.c(1), v}, s.fill_style("rest"));
    return b.finish();
}

PlaneGraph build_7c(const FamilySpec& s) {
    Build b;
    b.start_outer(7);
    Vertex u = b.fresh("u"), v = b.fresh("v");
    b.face({b.c(1), b.c(2), b.c(3), v, u});
    b.fill({b.c(3), b.c(4), b.c(5), b.c(6), b.c(7), b.c(1), u, v},
           s.fill_style("rest"));
    return b.finish();
}

PlaneGraph build_8a(const FamilySpec& s) {
    Build b;
    b.start_outer(8);
    b.fill(b.outer, s.fill_style("disk"));
    return b.finish();
}

PlaneGraph build_8b(const FamilySpec& s) {
    // 6-face sharing a path of length t >= 1 with C.
    int t = seg(s, "share", 1);
    if (t < 1 || t > 5) throw std::invalid_argument("8b share must be 1..5");
    Build b;
    b.start_outer(8);
    auto path = b.chain(b.c(t + 1), b.c(1), 6 - t, "p");
    std::vector<Vertex> f;
    for (int i = 1; i <= t + 1; ++i) f.push_back(b.c(i));
    for (size_t i = 1; i + 1 < path.size(); ++i) f.push_back(path[i]);
    b.face(f);
    std::vector<Vertex> region;
    for (int i = t + 1; i <= 8; ++i) region.push_back(b.c(i));
    region.push_back(b.c(1));
    for (size_t i = path.size() - 1; i-- > 1;) region.push_back(path[i]);
    b.fill(region, s.fill_style("rest"));
    return b.finish();
}

PlaneGraph build_8c(const FamilySpec& s) {
    Build b;
    b.start_outer(8);
    Vertex a = b.fresh("a"), a2 = b.fresh("b");
    Vertex d = b.fresh("d"), e = b.fresh("e");
    b.face({b.c(1), b.c(2), b.c(3), a, a2});
    b.face({b.c(5), b.c(6), b.c(7), d, e});
    b.fill({b.c(7), b.c(8), b.c(1), a2, a, b.c(3), b.c(4), b.c(5), e, d},
           s.fill_style("rest"));
    return b.finish();
}

PlaneGraph build_8d(const FamilySpec& s) {
    Build b;
    b.start_outer(8);
    Vertex v1 = b.fresh("v1"), z = b.fresh("z"), v2 = b.fresh("v2"),
           v3 = b.fresh("v3");
    Vertex w1 = b.fresh("w1"), w2 = b.fresh("w2"), w3 = b.fresh("w3");
    b.face({b.c(1), v1, z, v2, v3});
    b.face({z, w1, b.c(5), w2, w3});
    b.fill({b.c(1), b.c(2), b.c(3), b.c(4), b.c(5), w1, z, v1},
           s.fill_style("left"));
    b.fill({b.c(5), b.c(6), b.c(7), b.c(8), b.c(1), v3, v2, z, w3, w2},
           s.fill_style("right"));
    return b.finish();
}

PlaneGraph build_9a(const FamilySpec& s) {
    int share = seg(s, "share", 2);
    if (share < 2 || share > 3) throw std::invalid_argument("9a share must be 2..3");
    Build b;
    b.start_outer(9);
    auto path = b.chain(b.c(share + 1), b.c(1), 5 - share, "u");
    std::vector<Vertex> f;
    for (int i = 1; i <= share + 1; ++i) f.push_back(b.c(i));
    for (size_t i = 1; i + 1 < path.size(); ++i) f.push_back(path[i]);
    b.face(f);
    std::vector<Vertex> region;
    for (int i = share + 1; i <= 9; ++i) region.push_back(b.c(i));
    region.push_back(b.c(1));
    for (size_t i = path.size() - 1; i-- > 1;) region.push_back(path[i]);
    b.fill(region, s.fill_style("rest"));
    return b.finish();
}

PlaneGraph build_9b(const FamilySpec&) {
    // 7-face disjoint from C inside a quadrangulated annulus (r(9) = 0).
    Build b;
    b.start_outer(9);
    std::vector<Vertex> x;
    for (int i = 0; i < 7; ++i) x.push_back(b.fresh("x" + std::to_string(i)));
    for (int i = 0; i < 6; ++i)
        b.face({b.outer[i], b.outer[i + 1], x[(i + 1) % 7], x[i]});
    b.face({b.outer[6], b.outer[7], x[0], x[6]});
    b.face({b.outer[7], b.outer[8], b.outer[0], x[0]});
    b.face({x[0], x[1], x[2], x[3], x[4], x[5], x[6]});
    return b.finish();
}

// {5,6} with cuts of kind (00): arcs X (6-face side), Z (5-face side),
// Y split into ya + yb.
PlaneGraph build_9c1(const FamilySpec& s) {
    int x = seg(s, "x", 1), ya = seg(s, "ya", 4), yb = seg(s, "yb", 1),
        z = seg(s, "z", 3), k = seg(s, "k", 2), l = seg(s, "l", 5);
    if (x + ya + yb + z != 9 || k + z != 5 || l + x != 6)
        throw std::invalid_argument("9c1 segments violate the solution row");
    Build b;
    b.start_outer(9);
    Vertex w1 = b.c(1), w2 = b.c(1 + x);
    Vertex v1 = b.c(1 + x + ya), v2 = b.c(1 + x + ya + z);
    auto K = b.chain(v1, v2, k, "p");
    auto L = b.chain(w1, w2, l, "q");
    std::vector<Vertex> f5;
    for (int i = 0; i <= z; ++i) f5.push_back(b.c(1 + x + ya + i));
    for (size_t i = K.size() - 1; i-- > 1;) f5.push_back(K[i]);
    b.face(f5);
    std::vector<Vertex> f6;
    for (int i = 0; i <= x; ++i) f6.push_back(b.c(1 + i));
    for (size_t i = L.size() - 1; i-- > 1;) f6.push_back(L[i]);
    b.face(f6);
    std::vector<Vertex> region;
    for (int i = 1 + x; i <= 1 + x + ya; ++i) region.push_back(b.c(i));
    for (size_t i = 1; i + 1 < K.size(); ++i) region.push_back(K[i]);
    for (int i = 1 + x + ya + z; i <= 9 + 1; ++i) region.push_back(b.c(i));
    for (size_t i = 1; i + 1 < L.size(); ++i) region.push_back(L[i]);
    b.fill(region, s.fill_style("middle"));
    return b.finish();
}

// {5,6} with nested cuts of kind (22).
PlaneGraph build_9c2(const FamilySpec& s) {
    int x = seg(s, "x", 4), ya = seg(s, "ya", 1), yb = seg(s, "yb", 1),
        z = seg(s, "z", 3), k = seg(s, "k", 2), l = seg(s, "l", 2);
    if (x + ya + yb + z != 9 || k + x != 6 || l + z != 5)
        throw std::invalid_argument("9c2 segments violate the solution row");
    Build b;
    b.start_outer(9);
    Vertex v1 = b.c(1), v2 = b.c(1 + x);
    Vertex w2 = b.c(1 + x + yb), w1 = b.c(1 + x + yb + z);
    auto K = b.chain(v1, v2, k, "s");
    auto L = b.chain(w1, w2, l, "t");
    std::vector<Vertex> f6;
    for (int i = 0; i <= x; ++i) f6.push_back(b.c(1 + i));
    for (size_t i = K.size() - 1; i-- > 1;) f6.push_back(K[i]);
    b.face(f6);
    std::vector<Vertex> f5;
    for (int i = 0; i <= z; ++i) f5.push_back(b.c(1 + x + yb + i));
    for (size_t i = L.size() - 1; i-- > 1;) f5.push_back(L[i]);
    b.face(f5);
    std::vector<Vertex> region{v1};
    for (size_t i = 1; i + 1 < K.size(); ++i) region.push_back(K[i]);
    for (int i = 1 + x; i <= 1 + x + yb; ++i) region.push_back(b.c(i));
    for (size_t i = 1; i + 1 < L.size(); ++i) region.push_back(L[i]);
    for (int i = 1 + x + yb + z; i <= 9; ++i) region.push_back(b.c(i));
    b.fill(region, s.fill_style("middle"));
    return b.finish();
}

// {5,6} where the cuts cross at a common point v (kind (11)); the 6-face and
// 5-face share only v with C disjoint from them apart from the endpoints.
PlaneGraph build_9d(const FamilySpec& s, bool d1) {
    int k1 = seg(s, "k1", d1 ? 1 : 2), k2 = seg(s, "k2", d1 ? 3 : 2);
    int l1 = seg(s, "l1", d1 ? 2 : 3), l2 = seg(s, "l2", d1 ? 5 : 4);
    int y = seg(s, "y", 3), w = seg(s, "w", 6);
    if (k1 + l2 != 6 || k2 + l1 != 5 || y + w != 9)
        throw std::invalid_argument("9d segments violate the solution row");
    Build b;
    b.start_outer(9);
    Vertex a = b.c(1), bb = b.c(1 + y);
    Vertex v = b.fresh("v");
    auto K1 = b.chain(a, v, k1, "x");          // a .. v (k1 edges)
    auto K2 = b.chain(v, bb, k2, "m");         // v .. b (k2 edges)
    auto L2 = b.chain(a, v, l2, "y");          // a .. v (l2 edges)
    auto L1 = b.chain(v, bb, l1, "z");         // v .. b (l1 edges)
    std::vector<Vertex> f6{a};
    for (size_t i = 1; i + 1 < L2.size(); ++i) f6.push_back(L2[i]);
    f6.push_back(v);
    for (size_t i = K1.size() - 1; i-- > 1;) f6.push_back(K1[i]);
    b.face(f6);
    std::vector<Vertex> f5{v};
    for (size_t i = 1; i + 1 < L1.size(); ++i) f5.push_back(L1[i]);
    f5.push_back(bb);
    for (size_t i = K2.size() - 1; i-- > 1;) f5.push_back(K2[i]);
    b.face(f5);
    std::vector<Vertex> yreg;
    for (int i = 1; i <= 1 + y; ++i) yreg.push_back(b.c(i));
    for (size_t i = L1.size() - 1; i-- > 1;) yreg.push_back(L1[i]);
    yreg.push_back(v);
    for (size_t i = L2.size() - 1; i-- > 1;) yreg.push_back(L2[i]);
    b.fill(yreg, s.fill_style("yside"));
    std::vector<Vertex> wreg;
    for (int i = 1 + y; i <= 10; ++i) wreg.push_back(b.c(i));
    for (size_t i = 1; i + 1 < K1.size(); ++i) wreg.push_back(K1[i]);
    wreg.push_back(v);
    for (size_t i = 1; i + 1 < K2.size(); ++i) wreg.push_back(K2[i]);
    b.fill(wreg, s.fill_style("wside"));
    return b.finish();
}

// Three disjoint cuts of kind (00), each bounding a facial 5-face that
// shares two edges with C (case B1).  w1..w3 split the three sink edges
// between the lonely arcs.
PlaneGraph build_b11(const FamilySpec& s) {
    int w1 = seg(s, "w1", 1), w2 = seg(s, "w2", 1), w3 = seg(s, "w3", 1);
    if (w1 + w2 + w3 != 3 || w1 < 0 || w2 < 0 || w3 < 0)
        throw std::invalid_argument("b11 sink arcs must sum to 3");
    Build b;
    b.start_outer(9);
    int starts[3] = {1, 3 + w1, 5 + w1 + w2};
    int gaps[3] = {w1, w2, w3};
    std::vector<Vertex> cuts[3];
    for (int t = 0; t < 3; ++t) {
        cuts[t] = b.chain(b.c(starts[t]), b.c(starts[t] + 2), 3,
                          "a" + std::to_string(t));
        std::vector<Vertex> f{b.c(starts[t]), b.c(starts[t] + 1),
                              b.c(starts[t] + 2)};
        for (size_t i = cuts[t].size() - 1; i-- > 1;) f.push_back(cuts[t][i]);
        b.face(f);
    }
    std::vector<Vertex> region;
    for (int t = 0; t < 3; ++t) {
        region.push_back(b.c(starts[t]));
        for (size_t i = 1; i + 1 < cuts[t].size(); ++i) region.push_back(cuts[t][i]);
        for (int i = 0; i < gaps[t]; ++i) region.push_back(b.c(starts[t] + 2 + i));
    }
    b.fill(region, s.fill_style("middle"));
    return b.finish();
}

}  // namespace

std::string FamilySpec::fill_style(const std::string& region) const {
    auto it = fill.find(region);
    return it == fill.end() ? "ladder" : it->second;
}

std::vector<std::string> catalog_families() {
    return {"6-quad", "7a", "7b", "7c", "8a", "8b", "8c", "8d",
            "9a", "9b", "9c1", "9c2", "9d1", "9d2", "b11"};
}

FamilySpec default_spec(const std::string& family) {
    FamilySpec s;
    s.family = family;
    return s;
}

PlaneGraph instantiate(const FamilySpec& spec) {
    const std::string& f = spec.family;
    if (f == "6-quad") return build_quad6(spec);
    if (f == "7a") return build_7a(spec);
    if (f == "7b") return build_7b(spec);
    if (f == "7c") return build_7c(spec);
    if (f == "8a") return build_8a(spec);
    if (f == "8b") return build_8b(spec);
    if (f == "8c") return build_8c(spec);
    if (f == "8d") return build_8d(spec);
    if (f == "9a") return build_9a(spec);
    if (f == "9b") return build_9b(spec);
    if (f == "9c1") return build_9c1(spec);
    if (f == "9c2") return build_9c2(spec);
    if (f == "9d1") return build_9d(spec, true);
    if (f == "9d2") return build_9d(spec, false);
    if (f == "b11") return build_b11(spec);
    throw std::invalid_argument("unknown family " + f);
}

PlaneGraph glue_chord(const PlaneGraph& g1, std::pair<Vertex, Vertex> e1,
                      const PlaneGraph& g2, std::pair<Vertex, Vertex> e2) {
    const int n1 = static_cast<int>(g1.outer.size());
    const int n2 = static_cast<int>(g2.outer.size());
    if (n1 + n2 != 11)
        throw std::invalid_argument("outer lengths must sum to 11 (4+7 or 5+6)");
    auto [a, bb] = e1;
    auto [cc, d] = e2;
    auto check_cw = [](const PlaneGraph& g, Vertex x, Vertex y) {
        int ix = g.outer_index(x);
        int n = static_cast<int>(g.outer.size());
        if (ix < 0 || g.outer[(ix + 1) % n] != y)
            throw std::invalid_argument("edge is not a clockwise outer edge");
    };
    check_cw(g1, a, bb);
    check_cw(g2, cc, d);

    // d is identified with a, c with b; g2 hangs on the far side of the edge.
    std::vector<Vertex> map2(g2.vertex_count(), -1);
    map2[d] = a;
    map2[cc] = bb;
    PlaneGraph g = g1;
    for (Vertex v = 0; v < g2.vertex_count(); ++v) {
        if (map2[v] >= 0) continue;
        map2[v] = static_cast<Vertex>(g.name.size());
        g.name.push_back("g2_" + g2.name[v]);
        g.rot.emplace_back();
    }
    for (Vertex v = 0; v < g2.vertex_count(); ++v) {
        if (v == d || v == cc) continue;
        for (Vertex u : g2.rot[v]) g.rot[map2[v]].push_back(map2[u]);
    }
    // merged rotations at the identified endpoints
    auto rotate_to = [](std::vector<Vertex> r, Vertex first) {
        auto it = std::find(r.begin(), r.end(), first);
        std::rotate(r.begin(), it, r.end());
        return r;
    };
    {
        // at a: g2's rotation at d arranged to end at c, then g1's at a
        // starting from b (the shared edge appears once)
        std::vector<Vertex> r2 = rotate_to(g2.rot[d], cc);
        std::rotate(r2.begin(), r2.begin() + 1, r2.end());  // ends with c
        std::vector<Vertex> merged;
        for (Vertex u : r2)
            if (u != cc) merged.push_back(map2[u]);
        for (Vertex u : rotate_to(g1.rot[a], bb)) merged.push_back(u);
        g.rot[a] = merged;
    }
    {
        std::vector<Vertex> r1 = rotate_to(g1.rot[bb], a);
        std::rotate(r1.begin(), r1.begin() + 1, r1.end());  // ends with a
        std::vector<Vertex> merged;
        for (Vertex u : r1)
            if (u != a) merged.push_back(u);
        merged.push_back(a);
        for (Vertex u : rotate_to(g2.rot[cc], d))
            if (u != d) merged.push_back(map2[u]);
        g.rot[bb] = merged;
    }
    // new outer: from b around g1 to a, then through g2 back to b
    std::vector<Vertex> outer;
    int ib = g1.outer_index(bb);
    for (int t = 0; t < n1 - 1; ++t) outer.push_back(g1.outer[(ib + t) % n1]);
    outer.push_back(a);
    int id = g2.outer_index(d);
    for (int t = 1; t < n2 - 1; ++t) outer.push_back(map2[g2.outer[(id + t) % n2]]);
    g.outer = outer;
    g.triangle_free = g1.triangle_free && g2.triangle_free;
    validate(g);
    return g;
}

ArcPatterns nonextendable_pattern(const FamilySpec& spec) {
    throw std::invalid_argument("no pattern table for family " + spec.family);
}

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec s;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::string tok;
        if (head == "family:") {
            ls >> s.family;
        } else if (head == "segments:") {
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad segment " + tok);
                s.segments[tok.substr(0, eq)] = std::stoi(tok.substr(eq + 1));
            }
        } else if (head == "identify:") {
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad identify " + tok);
                s.identify.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
            }
        } else if (head == "fill:") {
            while (ls >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad fill " + tok);
                s.fill[tok.substr(0, eq)] = tok.substr(eq + 1);
            }
        } else {
            throw std::invalid_argument("unrecognized spec line: " + line);
        }
    }
    if (s.family.empty()) throw std::invalid_argument("missing family:");
    return s;
}

std::string format_family_spec(const FamilySpec& s) {
    std::ostringstream out;
    out << "family: " << s.family << '\n';
    if (!s.segments.empty()) {
        out << "segments:";
        for (const auto& [k, v] : s.segments) out << ' ' << k << '=' << v;
        out << '\n';
    }
    if (!s.identify.empty()) {
        out << "identify:";
        for (const auto& [a, b] : s.identify) out << ' ' << a << '=' << b;
        out << '\n';
    }
    if (!s.fill.empty()) {
        out << "fill:";
        for (const auto& [k, v] : s.fill) out << ' ' << k << '=' << v;
        out << '\n';
    }
    return out.str();
}

}  // namespace trifree
