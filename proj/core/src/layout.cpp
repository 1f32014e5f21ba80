#include "trifree/layout.hpp"

namespace trifree {

int Layout::sum() const {
    int m = 0;
    for (int v : q) m += v;
    return m;
}

std::vector<int> allowed_q_values(int face_len) {
    std::vector<int> vals;
    for (int v = -face_len; v <= face_len; ++v)
        if (v % 3 == 0 && (v - face_len) % 2 == 0) vals.push_back(v);
    return vals;
}

std::vector<Layout> enumerate_balanced(const PlaneGraph& g, const FaceSet& fs,
                                       const Precoloring& psi) {
    BoundaryProfile p = boundary_profile(g, psi);
    const int target = p.n_sink - p.n_source;  // required sum of q

    Layout base;
    std::vector<std::vector<int>> choices;
    for (int f : fs.internal_faces()) {
        int len = fs.face_length(f);
        if (len >= 5) {
            base.face_ids.push_back(f);
            choices.push_back(allowed_q_values(len));
        }
    }
    std::vector<Layout> out;
    std::vector<int> cur(base.face_ids.size(), 0);
    auto rec = [&](auto&& self, size_t i, int sum) -> void {
        if (i == cur.size()) {
            if (sum == target) {
                Layout l = base;
                l.q = cur;
                out.push_back(std::move(l));
            }
            return;
        }
        for (int v : choices[i]) {
            cur[i] = v;
            self(self, i + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    return out;
}

Layout layout_of_coloring(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi) {
    Layout l;
    for (int f : fs.internal_faces()) {
        if (fs.face_length(f) < 5) continue;
        l.face_ids.push_back(f);
        l.q.push_back(delta_of(g, fs, phi, f));
    }
    return l;
}

bool is_balanced(const PlaneGraph& g, const Precoloring& psi, const Layout& q) {
    BoundaryProfile p = boundary_profile(g, psi);
    return p.n_source + q.sum() == p.n_sink;
}

}  // namespace trifree
