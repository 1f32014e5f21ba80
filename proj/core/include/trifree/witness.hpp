// Search for the cut witness certifying non-extension under a balanced
// layout: either a path with both ends on C and |n_s + m - n_t| > |K0|, or a
// cycle with at most one vertex on C and |m| > |K0|.
#pragma once

#include <optional>
#include <vector>

#include "trifree/layout.hpp"

namespace trifree {

struct CutWitness {
    enum Kind { Path, Cycle } kind = Path;
    std::vector<Vertex> vertices;   // the path / cycle
    std::vector<Vertex> side_path;  // P: outer subpath (path case only)
    int n_source = 0, n_sink = 0;   // counts on P
    int m = 0;                      // sum of q over enclosed faces
};

// Re-check the defining inequality of a claimed witness.
bool verify_witness(const PlaneGraph& g, const Precoloring& psi, const Layout& q,
                    const CutWitness& w);

// Exhaustive over candidate paths (shortest first) and short cycles.
std::optional<CutWitness> find_witness(const PlaneGraph& g, const FaceSet& fs,
                                       const Precoloring& psi, const Layout& q);

}  // namespace trifree
