#include "trifree/criticality.hpp"

#include <algorithm>
#include <set>

namespace trifree {

namespace {

std::mutex cache_mutex;
std::map<std::string, bool> cache;

PlaneGraph remove_edge(const PlaneGraph& g, Vertex u, Vertex v) {
    PlaneGraph h = g;
    auto& ru = h.rot[u];
    ru.erase(std::find(ru.begin(), ru.end(), v));
    auto& rv = h.rot[v];
    rv.erase(std::find(rv.begin(), rv.end(), u));
    return h;
}

bool outer_edge(const PlaneGraph& g, Vertex a, Vertex b) {
    int n = static_cast<int>(g.outer.size());
    int ia = g.outer_index(a), ib = g.outer_index(b);
    if (ia < 0 || ib < 0) return false;
    return (ib - ia + n) % n == 1 || (ia - ib + n) % n == 1;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::NotCritical: return "not-critical";
        case Family::Quad6: return "6-quad";
        case Family::F7a: return "7a";
        case Family::F7b: return "7b";
        case Family::F7c: return "7c";
        case Family::F8a: return "8a";
        case Family::F8b: return "8b";
        case Family::F8c: return "8c";
        case Family::F8d: return "8d";
        case Family::F9a: return "9a";
        case Family::F9b: return "9b";
        case Family::F9c1: return "9c1";
        case Family::F9c2: return "9c2";
        case Family::F9d1: return "9d1";
        case Family::F9d2: return "9d2";
        case Family::F9Bij: return "9-Bij";
        case Family::F9Chord: return "9-chord";
    }
    return "?";
}

CriticalityVerdict is_critical(const PlaneGraph& g) {
    if (g.outer.size() > 9)
        throw std::invalid_argument("outer cycle too long for brute force");
    CriticalityVerdict verdict;
    verdict.nonextendable = nonextendable_precolorings(g);

    std::vector<std::pair<Vertex, Vertex>> inner_edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.rot[u])
            if (u < v && !outer_edge(g, u, v)) inner_edges.push_back({u, v});
    if (inner_edges.empty()) return verdict;  // E(G) = E(C): not critical

    for (auto [u, v] : inner_edges) {
        PlaneGraph h = remove_edge(g, u, v);
        bool found = false;
        for (const Precoloring& psi : verdict.nonextendable) {
            if (extend(h, psi)) {
                verdict.witness_per_edge.push_back({u, v, psi});
                found = true;
                break;
            }
        }
        if (!found) {
            verdict.failing_edge = {{u, v}};
            verdict.is_critical = false;
            verdict.witness_per_edge.clear();
            return verdict;
        }
    }
    verdict.is_critical = true;
    return verdict;
}

bool is_critical_cached(const PlaneGraph& g) {
    std::string key = canonical_form(g);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    bool result = is_critical(g).is_critical;
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = result;  // deterministic value; last writer wins harmlessly
    return result;
}

void clear_criticality_cache() {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.clear();
}

bool interior_condition(const PlaneGraph& g) {
    for (const CycleInfo& c : cycles_up_to(g, 8)) {
        if (c.facial) continue;
        PlaneGraph disk = disk_subgraph(g, c.cycle);
        if (!is_critical_cached(disk)) return false;
    }
    return true;
}

namespace {

// Edge indices of the outer cycle appearing on face f, plus the test that
// the intersection subgraph face-cap-C is a single path of length >= minlen
// (vertex-only touches break path-ness).
struct CMeet {
    std::vector<int> edge_idx;   // outer edge indices on the face
    bool single_path = false;
    int path_len = 0;
    int path_start = -1;         // outer index of the path's clockwise start
};

CMeet face_outer_meet(const PlaneGraph& g, const std::vector<Vertex>& face) {
    const int n = static_cast<int>(g.outer.size());
    CMeet m;
    std::set<int> idx;
    for (size_t i = 0; i < face.size(); ++i) {
        Vertex a = face[i], b = face[(i + 1) % face.size()];
        int ia = g.outer_index(a), ib = g.outer_index(b);
        if (ia < 0 || ib < 0) continue;
        if ((ib + 1) % n == ia % n || (ia + 1) % n == ib) {
            int e = (ia + 1) % n == ib ? ia : ib;
            idx.insert(e);
        }
    }
    m.edge_idx.assign(idx.begin(), idx.end());
    int cnt = static_cast<int>(idx.size());
    if (cnt == 0) {
        m.single_path = false;
        m.path_len = 0;
        // still a "path of length 0" only if at most one vertex touches C
        int touches = 0;
        for (Vertex v : face)
            if (g.on_outer(v)) ++touches;
        m.single_path = touches <= 1;
        return m;
    }
    // Contiguity: some start s with edges s, s+1, ..., s+cnt-1 (mod n).
    int start = -1;
    for (int e : idx)
        if (!idx.count((e - 1 + n) % n)) { start = e; break; }
    if (start < 0) return m;  // all outer edges: face == C, not a path
    for (int t = 0; t < cnt; ++t)
        if (!idx.count((start + t) % n)) return m;
    // No stray vertex contacts outside the path.
    std::set<Vertex> path_verts;
    for (int t = 0; t <= cnt; ++t) path_verts.insert(g.outer[(start + t) % n]);
    for (Vertex v : face)
        if (g.on_outer(v) && !path_verts.count(v)) return m;
    m.single_path = true;
    m.path_len = cnt;
    m.path_start = start;
    return m;
}

std::vector<std::pair<Vertex, Vertex>> chords_of(const PlaneGraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.rot[u])
            if (u < v && g.on_outer(u) && g.on_outer(v) && !outer_edge(g, u, v))
                out.push_back({u, v});
    return out;
}

bool has_separating_5minus(const PlaneGraph& g) {
    for (const CycleInfo& c : cycles_up_to(g, 5))
        if (c.separating) return true;
    return false;
}

std::vector<int> faces_of_len(const PlaneGraph& g, const FaceSet& fs, int len) {
    std::vector<int> out;
    for (int f : fs.internal_faces())
        if (fs.face_length(f) == len) out.push_back(f);
    return out;
}

// The internal part of a face boundary: the face walk rotated so that it
// starts at the clockwise end of the shared path and runs through the
// interior vertices back to the path's start.
std::vector<Vertex> face_cut_path(const PlaneGraph& g, const FaceSet& fs, int f,
                                  const CMeet& m) {
    const int n = static_cast<int>(g.outer.size());
    const auto& walk = fs.faces[f];
    Vertex from = g.outer[(m.path_start + m.path_len) % n];
    Vertex to = g.outer[m.path_start];
    int p = -1;
    for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == from) p = static_cast<int>(i);
    std::vector<Vertex> path;
    for (size_t t = 0; t < walk.size(); ++t) {
        Vertex v = walk[(p + t) % walk.size()];
        path.push_back(v);
        if (t > 0 && v == to) break;
    }
    return path;
}

// Kind (t1 t2) of two outer-anchored paths: t_i counts endpoints of the
// other path interior to P_i, the clockwise arc from the path's first to
// its last endpoint on the side of its face.
std::pair<int, int> cut_kind(const PlaneGraph& g, const std::vector<Vertex>& k1,
                             int p1_start, int p1_len,
                             const std::vector<Vertex>& k2, int p2_start,
                             int p2_len) {
    const int n = static_cast<int>(g.outer.size());
    auto interior_count = [&](int start, int len, const std::vector<Vertex>& other) {
        std::set<Vertex> inner;
        for (int t = 1; t < len; ++t) inner.insert(g.outer[(start + t) % n]);
        int c = 0;
        if (inner.count(other.front())) ++c;
        if (inner.count(other.back())) ++c;
        return c;
    };
    return {interior_count(p1_start, p1_len, k2), interior_count(p2_start, p2_len, k1)};
}

Classification classify6(const PlaneGraph& g, const FaceSet& fs) {
    Classification c;
    if (!fs.internal_5plus().empty()) return c;
    for (const CycleInfo& cy : cycles_up_to(g, 4))
        if (cy.separating) return c;
    if (g.edge_count() == static_cast<int>(g.outer.size())) return c;
    c.family = Family::Quad6;
    return c;
}

Classification classify7(const PlaneGraph& g, const FaceSet& fs) {
    Classification c;
    if (has_separating_5minus(g)) return c;
    auto chords = chords_of(g);
    auto s = fs.internal_5plus();
    if (!chords.empty()) {
        // shape (a): C plus one chord, nothing else
        if (chords.size() == 1 && g.edge_count() == 8 &&
            g.vertex_count() == 7) {
            c.family = Family::F7a;
            auto [x, y] = chords[0];
            int n = 7;
            int ix = g.outer_index(x), iy = g.outer_index(y);
            // align so the chord joins c1 and c5 (distance 4 clockwise)
            if ((iy - ix + n) % n == 4) { c.rotation = ix; c.reflected = false; }
            else if ((ix - iy + n) % n == 4) { c.rotation = iy; c.reflected = false; }
            else if ((iy - ix + n) % n == 3) { c.rotation = iy; c.reflected = true; }
            else { c.rotation = ix; c.reflected = true; }
        }
        return c;
    }
    if (s != std::vector<int>{5}) return c;
    int f5 = faces_of_len(g, fs, 5)[0];
    CMeet m = face_outer_meet(g, fs.faces[f5]);
    if (!m.single_path) return c;
    if (m.path_len == 3) {
        c.family = Family::F7b;
        c.rotation = m.path_start;
    } else if (m.path_len == 2) {
        c.family = Family::F7c;
        c.rotation = m.path_start;
    }
    return c;
}

Classification classify8(const PlaneGraph& g, const FaceSet& fs) {
    Classification c;
    if (has_separating_5minus(g)) return c;
    for (const CycleInfo& cy : cycles_up_to(g, 6)) {
        if (cy.facial || cy.cycle.size() != 6) continue;
        for (int f : faces_inside(g, fs, cy.cycle))
            if (fs.face_length(f) != 4) return c;
    }
    auto s = fs.internal_5plus();
    if (s.empty()) {
        if (g.edge_count() == static_cast<int>(g.outer.size())) return c;
        c.family = Family::F8a;
        return c;
    }
    if (s == std::vector<int>{6}) {
        CMeet m = face_outer_meet(g, fs.faces[faces_of_len(g, fs, 6)[0]]);
        if (m.single_path && m.path_len >= 1) c.family = Family::F8b;
        return c;
    }
    if (s == std::vector<int>{5, 5}) {
        auto f5s = faces_of_len(g, fs, 5);
        CMeet m0 = face_outer_meet(g, fs.faces[f5s[0]]);
        CMeet m1 = face_outer_meet(g, fs.faces[f5s[1]]);
        if (m0.single_path && m0.path_len >= 2 && m1.single_path &&
            m1.path_len >= 2) {
            c.family = Family::F8c;
            return c;
        }
        // shape (d): f1 = c1 v1 z v2 v3 and f2 = z w1 c5 w2 w3 clockwise,
        // possibly with identifications.
        const int n = 8;
        for (int first : {0, 1}) {
            const auto w1 = fs.faces[f5s[first]];
            const auto w2 = fs.faces[f5s[1 - first]];
            for (int refl = 0; refl < 2; ++refl) {
                auto a = w1, b = w2;
                if (refl) {
                    std::reverse(a.begin(), a.end());
                    std::reverse(b.begin(), b.end());
                }
                for (int ra = 0; ra < 5; ++ra)
                    for (int rb = 0; rb < 5; ++rb) {
                        Vertex c1 = a[ra % 5], z1 = a[(ra + 2) % 5];
                        Vertex z2 = b[rb % 5], c5 = b[(rb + 2) % 5];
                        if (z1 != z2 || !g.on_outer(c1) || !g.on_outer(c5))
                            continue;
                        int i1 = g.outer_index(c1), i5 = g.outer_index(c5);
                        int d = refl ? (i1 - i5 + n) % n : (i5 - i1 + n) % n;
                        if (d == 4) {
                            c.family = Family::F8d;
                            c.rotation = i1;
                            c.reflected = refl;
                            return c;
                        }
                    }
            }
        }
        return c;
    }
    return c;
}

Classification classify9(const PlaneGraph& g, const FaceSet& fs) {
    Classification c;
    auto chords = chords_of(g);
    if (!chords.empty()) {
        // Decompose at a chord into pieces of lengths 4+7 or 5+6; the graph
        // is critical iff each side is a bare cycle or itself critical.
        auto [x, y] = chords[0];
        const int n = 9;
        int ix = g.outer_index(x), iy = g.outer_index(y);
        auto arc_cycle = [&](int from, int to) {
            std::vector<Vertex> cyc;
            for (int t = from; ; t = (t + 1) % n) {
                cyc.push_back(g.outer[t]);
                if (t == to) break;
            }
            return cyc;
        };
        for (const auto& piece : {arc_cycle(ix, iy), arc_cycle(iy, ix)}) {
            PlaneGraph disk = disk_subgraph(g, piece);
            bool bare = disk.edge_count() == static_cast<int>(disk.outer.size());
            if (!bare && !is_critical_cached(disk)) return c;
        }
        c.family = Family::F9Chord;
        return c;
    }
    if (!interior_condition(g)) return c;
    auto s = fs.internal_5plus();
    if (s == std::vector<int>{5}) {
        CMeet m = face_outer_meet(g, fs.faces[faces_of_len(g, fs, 5)[0]]);
        if (m.single_path && m.path_len >= 2) {
            c.family = Family::F9a;
            c.rotation = m.path_start;
        }
        return c;
    }
    if (s == std::vector<int>{7}) {
        CMeet m = face_outer_meet(g, fs.faces[faces_of_len(g, fs, 7)[0]]);
        if (m.single_path) c.family = Family::F9b;  // r(9)=0: empty allowed
        return c;
    }
    if (s == std::vector<int>{5, 6}) {
        int f5 = faces_of_len(g, fs, 5)[0];
        int f6 = faces_of_len(g, fs, 6)[0];
        CMeet m5 = face_outer_meet(g, fs.faces[f5]);
        CMeet m6 = face_outer_meet(g, fs.faces[f6]);
        if (m5.single_path && m5.path_len >= 2 && m6.single_path &&
            m6.path_len >= 1) {
            std::vector<Vertex> k5 = face_cut_path(g, fs, f5, m5);
            std::vector<Vertex> k6 = face_cut_path(g, fs, f6, m6);
            auto [t1, t2] = cut_kind(g, k5, m5.path_start, m5.path_len, k6,
                                     m6.path_start, m6.path_len);
            c.family = (t1 == 2 || t2 == 2) ? Family::F9c2 : Family::F9c1;
            c.detail = "kind (" + std::to_string(t1) + std::to_string(t2) + ")";
            return c;
        }
        // (d): the two faces meet in the common point of the crossing cuts.
        if (nonextendable_precolorings(g).empty()) return c;
        Vertex shared = -1;
        std::set<Vertex> in5(fs.faces[f5].begin(), fs.faces[f5].end());
        for (Vertex v : fs.faces[f6])
            if (in5.count(v) && !g.on_outer(v)) shared = v;
        if (shared >= 0) {
            // distance along the 6-face from the common point to the nearest
            // outer vertex separates (d1) from (d2)
            const auto& w = fs.faces[f6];
            int p = 0;
            while (w[p] != shared) ++p;
            int len = static_cast<int>(w.size());
            int d = len;
            for (int t = 1; t < len; ++t) {
                if (g.on_outer(w[(p + t) % len])) { d = std::min(d, t); break; }
            }
            for (int t = 1; t < len; ++t) {
                if (g.on_outer(w[(p - t + len) % len])) { d = std::min(d, t); break; }
            }
            c.family = d <= 1 ? Family::F9d1 : Family::F9d2;
        } else {
            c.family = Family::F9d1;
            c.detail = "faces meet only through identified boundary";
        }
        return c;
    }
    if (s == std::vector<int>{5, 5, 5}) {
        if (!nonextendable_precolorings(g).empty()) c.family = Family::F9Bij;
        return c;
    }
    return c;
}

}  // namespace

Classification classify(const PlaneGraph& g) {
    FaceSet fs = faces(g);
    switch (g.outer.size()) {
        case 6: return classify6(g, fs);
        case 7: return classify7(g, fs);
        case 8: return classify8(g, fs);
        case 9: return classify9(g, fs);
        default:
            throw std::invalid_argument("classification needs outer length 6..9");
    }
}

}  // namespace trifree
