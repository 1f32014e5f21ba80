// Parametric constructors for the critical families: path-length segments
// feed rotation-system templates, even regions get quadrangulation fills,
// and chord gluing assembles the chorded 9-cycle graphs.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trifree/coloring.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct FamilySpec {
    std::string family;
    std::map<std::string, int> segments;          // named stretch parameters
    std::vector<std::pair<std::string, std::string>> identify;
    std::map<std::string, std::string> fill;      // region name -> style
    std::string fill_style(const std::string& region) const;
};

// Families with templates, each with its minimal default parameters.
std::vector<std::string> catalog_families();
FamilySpec default_spec(const std::string& family);

// Builds the family member; validates girth, planarity and the segment
// constraints.  Throws GraphError / std::invalid_argument on bad specs.
PlaneGraph instantiate(const FamilySpec& spec);

// Identify e1 of g1 with e2 of g2 (both ordered clockwise along their outer
// cycles); outer lengths must sum to 11 so the result is a chorded 9-cycle.
PlaneGraph glue_chord(const PlaneGraph& g1, std::pair<Vertex, Vertex> e1,
                      const PlaneGraph& g2, std::pair<Vertex, Vertex> e2);

// Per-arc (n_source, n_sink) profiles predicted for the family's
// non-extendable precolorings, as count vectors over the instance's outer
// edges grouped by the template's arcs, normalized to more sources than
// sinks.  Compared against brute force in the tests.
struct ArcPatterns {
    std::vector<std::pair<int, int>> arcs;  // (first outer edge index, length)
    std::vector<std::vector<std::pair<int, int>>> rows;  // per-arc (ns, nt)
};
ArcPatterns nonextendable_pattern(const FamilySpec& spec);

// FamilySpec text format:
//   family: B21
//   segments: k1=2 k2=1
//   identify: v1=c2
//   fill: region1=ladder
FamilySpec parse_family_spec(const std::string& text);
std::string format_family_spec(const FamilySpec& spec);

}  // namespace trifree
