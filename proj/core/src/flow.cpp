#include "trifree/flow.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trifree {

bool ascending(int a, int b) {
    return (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
}

int delta_of(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi, int face) {
    // delta = outdeg - indeg of the dual vertex.  A dart (u, v) on the orbit
    // of `face` has the face on its right; the dual edge enters the face when
    // (phi(u), phi(v)) ascends.
    const auto& walk = fs.faces[face];
    int d = 0;
    for (size_t i = 0; i < walk.size(); ++i) {
        Vertex u = walk[i], v = walk[(i + 1) % walk.size()];
        d += ascending(phi[u], phi[v]) ? -1 : 1;
    }
    return d;
}

DualOrientation orient(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi) {
    if (!proper(g, phi)) throw std::invalid_argument("coloring is not proper");
    DualOrientation d;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.rot[u]) {
            if (v < u) continue;
            d.edges.push_back({u, v});
            d.left_to_right.push_back(ascending(phi[u], phi[v]));
        }
    for (size_t f = 0; f < fs.faces.size(); ++f)
        d.delta.push_back(delta_of(g, fs, phi, static_cast<int>(f)));

    const int n = static_cast<int>(g.outer.size());
    for (int i = 0; i < n; ++i) {
        Vertex a = g.outer[i], b = g.outer[(i + 1) % n];
        // The outer face lies left of the clockwise dart a->b: ascending means
        // the dual edge leaves the outer face (a source edge).
        if (ascending(phi[a], phi[b]))
            d.source_edges.push_back(i);
        else
            d.sink_edges.push_back(i);
    }

    // Invariants from the preliminaries: |delta| <= |f|, delta == |f| mod 2,
    // delta == 0 mod 3, with the per-size value sets they imply.
    for (size_t f = 0; f < fs.faces.size(); ++f) {
        int len = fs.face_length(static_cast<int>(f));
        int del = d.delta[f];
        if (std::abs(del) > len || (del - len) % 2 != 0 || del % 3 != 0)
            throw GraphError("dual orientation violates a delta invariant");
    }
    return d;
}

BoundaryProfile boundary_profile(const PlaneGraph& g, const Precoloring& psi) {
    if (!proper_on_outer(g, psi))
        throw std::invalid_argument("precoloring is not proper on the outer cycle");
    const int n = static_cast<int>(g.outer.size());
    BoundaryProfile p;
    p.pattern.resize(n);
    for (int i = 0; i < n; ++i) {
        bool src = ascending(psi[i], psi[(i + 1) % n]);
        p.pattern[i] = src;
        (src ? p.n_source : p.n_sink)++;
    }
    return p;
}

std::pair<int, int> profile_counts(const BoundaryProfile& p, int first_edge, int count) {
    const int n = static_cast<int>(p.pattern.size());
    int ns = 0, nt = 0;
    for (int t = 0; t < count; ++t)
        (p.pattern[(first_edge + t) % n] ? ns : nt)++;
    return {ns, nt};
}

}  // namespace trifree
