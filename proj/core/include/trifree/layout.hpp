// Layouts: integer assignments q to internal faces with q(f) <= |f|,
// q(f) = 0 mod 3 and q(f) = |f| mod 2; psi-balanced when n_s + sum q = n_t.
#pragma once

#include <vector>

#include "trifree/flow.hpp"

namespace trifree {

struct Layout {
    // One entry per internal 5+-face (4-faces implicitly carry 0).
    std::vector<int> face_ids;   // face ids in fs
    std::vector<int> q;          // parallel values
    int sum() const;
};

// Legal q-values for one face of the given length.
std::vector<int> allowed_q_values(int face_len);

std::vector<Layout> enumerate_balanced(const PlaneGraph& g, const FaceSet& fs,
                                       const Precoloring& psi);

// The layout f -> delta(f) of a proper coloring (guaranteed balanced).
Layout layout_of_coloring(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi);

bool is_balanced(const PlaneGraph& g, const Precoloring& psi, const Layout& q);

}  // namespace trifree
