#include "trifree/coloring.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace trifree {

bool proper_on_outer(const PlaneGraph& g, const Precoloring& psi) {
    const size_t n = g.outer.size();
    if (psi.size() != n) return false;
    for (size_t i = 0; i < n; ++i) {
        int a = psi[i], b = psi[(i + 1) % n];
        if (a < 1 || a > 3 || a == b) return false;
    }
    return true;
}

bool proper(const PlaneGraph& g, const FullColoring& phi) {
    if (phi.size() != static_cast<size_t>(g.vertex_count())) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (phi[v] < 1 || phi[v] > 3) return false;
        for (Vertex u : g.rot[v])
            if (phi[u] == phi[v]) return false;
    }
    return true;
}

namespace {

// Backtracking over the uncolored vertices; the next vertex is always one
// with the most already-colored neighbors (fail-first).
bool extend_rec(const PlaneGraph& g, FullColoring& col, int uncolored) {
    if (uncolored == 0) return true;
    Vertex best = -1;
    int best_score = -1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (col[v] != 0) continue;
        int score = 0;
        for (Vertex u : g.rot[v])
            if (col[u] != 0) ++score;
        if (score > best_score) { best_score = score; best = v; }
    }
    bool used[4] = {false, false, false, false};
    for (Vertex u : g.rot[best])
        if (col[u] != 0) used[col[u]] = true;
    for (int c = 1; c <= 3; ++c) {
        if (used[c]) continue;
        col[best] = c;
        if (extend_rec(g, col, uncolored - 1)) return true;
        col[best] = 0;
    }
    return false;
}

}  // namespace

std::optional<FullColoring> extend(const PlaneGraph& g, const Precoloring& psi) {
    if (!proper_on_outer(g, psi))
        throw std::invalid_argument("precoloring is not proper on the outer cycle");
    FullColoring col(g.vertex_count(), 0);
    for (size_t i = 0; i < g.outer.size(); ++i) col[g.outer[i]] = psi[i];
    // A chord between equally colored outer vertices already blocks psi.
    for (Vertex v : g.outer)
        for (Vertex u : g.rot[v])
            if (col[u] != 0 && col[u] == col[v]) return std::nullopt;
    int uncolored = g.vertex_count() - static_cast<int>(g.outer.size());
    if (!extend_rec(g, col, uncolored)) return std::nullopt;
    if (!proper(g, col)) throw GraphError("extension failed properness re-check");
    return col;
}

std::vector<Precoloring> proper_cycle_colorings(int n) {
    std::vector<Precoloring> out;
    Precoloring cur(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (cur[n - 1] != cur[0]) out.push_back(cur);
            return;
        }
        for (int c = 1; c <= 3; ++c) {
            if (i > 0 && cur[i - 1] == c) continue;
            cur[i] = c;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Precoloring> nonextendable_precolorings(const PlaneGraph& g) {
    const int n = static_cast<int>(g.outer.size());
    // Enumerate orbit representatives (psi[0]=1, psi[1]=2) and expand under
    // the color group S3; extension status is invariant under recoloring.
    static const std::array<std::array<int, 4>, 6> perms = {{
        {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3},
        {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}}};
    std::set<Precoloring> bad;
    for (const Precoloring& rep : proper_cycle_colorings(n)) {
        if (rep[0] != 1 || rep[1] != 2) continue;
        if (extend(g, rep)) continue;
        for (const auto& p : perms) {
            Precoloring img(n);
            for (int i = 0; i < n; ++i) img[i] = p[rep[i]];
            bad.insert(img);
        }
    }
    return {bad.begin(), bad.end()};
}

std::optional<FullColoring> neighbors_same_color(const PlaneGraph& g, Vertex v) {
    // Neighbors of v are pairwise non-adjacent in a triangle-free graph, so
    // assigning them one color is always locally consistent.
    for (Vertex a : g.rot[v])
        for (Vertex b : g.rot[v])
            if (a != b && g.adjacent(a, b)) return std::nullopt;
    for (int c = 1; c <= 3; ++c) {
        FullColoring col(g.vertex_count(), 0);
        for (Vertex u : g.rot[v]) col[u] = c;
        int uncolored = 0;
        for (Vertex w = 0; w < g.vertex_count(); ++w)
            if (col[w] == 0) ++uncolored;
        if (extend_rec(g, col, uncolored)) {
            if (!proper(g, col)) throw GraphError("improper coloring produced");
            return col;
        }
    }
    return std::nullopt;
}

}  // namespace trifree
