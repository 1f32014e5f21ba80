#include "trifree/witness.hpp"

#include <algorithm>
#include <cstdlib>

namespace trifree {

namespace {

// Sum of q over the faces strictly inside the given cycle.
int q_inside(const PlaneGraph& g, const FaceSet& fs, const Layout& q,
             const std::vector<Vertex>& cycle) {
    std::vector<int> inside = faces_inside(g, fs, cycle);
    int m = 0;
    for (size_t i = 0; i < q.face_ids.size(); ++i)
        if (std::find(inside.begin(), inside.end(), q.face_ids[i]) != inside.end())
            m += q.q[i];
    return m;
}

int abs_q_sum(const Layout& q) {
    int s = 0;
    for (int v : q.q) s += std::abs(v);
    return s;
}

bool outer_edge(const PlaneGraph& g, Vertex a, Vertex b) {
    int n = static_cast<int>(g.outer.size());
    int ia = g.outer_index(a), ib = g.outer_index(b);
    if (ia < 0 || ib < 0) return false;
    return (ib - ia + n) % n == 1 || (ia - ib + n) % n == 1;
}

}  // namespace

bool verify_witness(const PlaneGraph& g, const Precoloring& psi, const Layout& q,
                    const CutWitness& w) {
    FaceSet fs = faces(g);
    if (w.kind == CutWitness::Cycle) {
        int on_c = 0;
        for (Vertex v : w.vertices)
            if (g.on_outer(v)) ++on_c;
        if (on_c > 1) return false;
        int m = q_inside(g, fs, q, w.vertices);
        return m == w.m && std::abs(m) > static_cast<int>(w.vertices.size());
    }
    const auto& k0 = w.vertices;
    if (k0.size() < 2) return false;
    if (!g.on_outer(k0.front()) || !g.on_outer(k0.back())) return false;
    for (size_t i = 1; i + 1 < k0.size(); ++i)
        if (g.on_outer(k0[i])) return false;
    if (k0.front() != w.side_path.front() || k0.back() != w.side_path.back())
        return false;
    std::vector<Vertex> cyc = w.side_path;
    for (size_t i = k0.size() - 1; i-- > 1;) cyc.push_back(k0[i]);
    int m = q_inside(g, fs, q, cyc);
    BoundaryProfile p = boundary_profile(g, psi);
    int i0 = g.outer_index(w.side_path.front());
    auto [ns, nt] = profile_counts(p, i0, static_cast<int>(w.side_path.size()) - 1);
    if (ns != w.n_source || nt != w.n_sink || m != w.m) return false;
    int k0len = static_cast<int>(k0.size()) - 1;
    return std::abs(ns + m - nt) > k0len;
}

std::optional<CutWitness> find_witness(const PlaneGraph& g, const FaceSet& fs,
                                       const Precoloring& psi, const Layout& q) {
    const int n = static_cast<int>(g.outer.size());
    const int qsum = abs_q_sum(q);
    BoundaryProfile prof = boundary_profile(g, psi);

    // Cycle witnesses need |m| > |K0|, so only lengths < sum|q| can work.
    if (qsum >= 4) {
        for (const CycleInfo& c : cycles_up_to(g, qsum - 1)) {
            int on_c = 0;
            for (Vertex v : c.cycle)
                if (g.on_outer(v)) ++on_c;
            if (on_c > 1) continue;
            int m = q_inside(g, fs, q, c.cycle);
            if (std::abs(m) > static_cast<int>(c.cycle.size())) {
                CutWitness w;
                w.kind = CutWitness::Cycle;
                w.vertices = c.cycle;
                w.m = m;
                return w;
            }
        }
    }

    // Path candidates: simple paths between distinct outer vertices, no
    // internal vertex on C.  |n_s + m - n_t| <= |P| + sum|q| bounds the
    // useful witness length by |C| + sum|q| - 1.
    const int maxlen = n + qsum - 1;
    std::vector<std::vector<Vertex>> paths;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<Vertex> cur;
    auto dfs = [&](auto&& self, Vertex v) -> void {
        for (Vertex u : g.rot[v]) {
            if (used[u]) continue;
            if (g.on_outer(u)) {
                if (g.outer_index(cur.front()) < g.outer_index(u)) {
                    cur.push_back(u);
                    if (!(cur.size() == 2 && outer_edge(g, cur.front(), cur.back())))
                        paths.push_back(cur);
                    cur.pop_back();
                }
                continue;
            }
            if (static_cast<int>(cur.size()) > maxlen) continue;
            used[u] = 1;
            cur.push_back(u);
            self(self, u);
            cur.pop_back();
            used[u] = 0;
        }
    };
    for (Vertex s : g.outer) {
        cur = {s};
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s);
    }
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& k0 : paths) {
        int k0len = static_cast<int>(k0.size()) - 1;
        int ia = g.outer_index(k0.front());
        int ib = g.outer_index(k0.back());
        for (int side = 0; side < 2; ++side) {
            int from = side == 0 ? ia : ib;
            int to = side == 0 ? ib : ia;
            int plen = (to - from + n) % n;
            std::vector<Vertex> P;
            for (int t = 0; t <= plen; ++t) P.push_back(g.outer[(from + t) % n]);
            std::vector<Vertex> cyc = P;
            if (side == 0)
                for (size_t i = k0.size() - 1; i-- > 1;) cyc.push_back(k0[i]);
            else
                for (size_t i = 1; i + 1 < k0.size(); ++i) cyc.push_back(k0[i]);
            int m = q_inside(g, fs, q, cyc);
            auto [ns, nt] = profile_counts(prof, from, plen);
            if (std::abs(ns + m - nt) > k0len) {
                CutWitness w;
                w.kind = CutWitness::Path;
                w.vertices = k0;
                if (side == 1) std::reverse(w.vertices.begin(), w.vertices.end());
                w.side_path = P;
                w.n_source = ns;
                w.n_sink = nt;
                w.m = m;
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace trifree
