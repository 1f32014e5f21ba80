// Coloring <-> dual orientation correspondence: orient dual edges from a
// coloring, classify outer edges as source/sink, compute delta(f).
#pragma once

#include <vector>

#include "trifree/coloring.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct DualOrientation {
    // For the dart (u = edges[i].first, v = .second): true when the dual edge
    // points from the face left of u->v to the face on its right.
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<bool> left_to_right;
    std::vector<int> delta;                   // per face id
    std::vector<int> source_edges, sink_edges;  // outer edge indices
};

struct BoundaryProfile {
    int n_source = 0;
    int n_sink = 0;
    // pattern[i] refers to the outer edge (outer[i], outer[i+1]); true=source.
    std::vector<bool> pattern;
};

// Ascending color pairs (1,2),(2,3),(3,1) orient the dual edge from the left
// face of u->v to the right face.  The convention makes the clockwise
// coloring 1,2,3,... all-source.
bool ascending(int a, int b);

DualOrientation orient(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi);
BoundaryProfile boundary_profile(const PlaneGraph& g, const Precoloring& psi);
int delta_of(const PlaneGraph& g, const FaceSet& fs, const FullColoring& phi, int face);

// Per-edge source/sink counts over a set of outer edge indices.
std::pair<int, int> profile_counts(const BoundaryProfile& p, int first_edge, int count);

}  // namespace trifree
