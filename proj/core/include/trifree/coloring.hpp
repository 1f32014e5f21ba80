// 3-coloring extension: decide and enumerate extensions of precolorings of
// the outer cycle.
#pragma once

#include <optional>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

// Colors are 1..3.  A precoloring is aligned with g.outer.
using Precoloring = std::vector<int>;
using FullColoring = std::vector<int>;  // indexed by vertex id

bool proper_on_outer(const PlaneGraph& g, const Precoloring& psi);
bool proper(const PlaneGraph& g, const FullColoring& phi);

// Backtracking extension; internal vertices are colored fail-first.
// Throws std::invalid_argument when psi is improper on the outer cycle.
std::optional<FullColoring> extend(const PlaneGraph& g, const Precoloring& psi);

// All proper precolorings of a cycle of length n ((k-1)^n + (-1)^n (k-1) of
// them for k = 3), in lexicographic order.
std::vector<Precoloring> proper_cycle_colorings(int n);

// Exactly the proper precolorings of the outer cycle with no extension.
// Enumeration runs over S3 orbit representatives and expands the orbits.
std::vector<Precoloring> nonextendable_precolorings(const PlaneGraph& g);

// A proper coloring in which all neighbors of v get one color (Corollary of
// the 8-cycle characterization; v must have degree 4 in a triangle-free g,
// although the search itself works for any independent neighborhood).
std::optional<FullColoring> neighbors_same_color(const PlaneGraph& g, Vertex v);

}  // namespace trifree
