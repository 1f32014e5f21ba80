// Brute-force criticality decisions plus the structural classifier for
// precolored outer cycles of length 6 through 9.
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "trifree/coloring.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct EdgeWitness {
    Vertex u = -1, v = -1;     // the deleted edge
    Precoloring psi;           // extends to g - uv but not to g
};

struct CriticalityVerdict {
    bool is_critical = false;
    std::vector<EdgeWitness> witness_per_edge;
    std::optional<std::pair<Vertex, Vertex>> failing_edge;
    std::vector<Precoloring> nonextendable;
};

enum class Family {
    NotCritical,
    Quad6,
    F7a, F7b, F7c,
    F8a, F8b, F8c, F8d,
    F9a, F9b, F9c1, F9c2, F9d1, F9d2, F9Bij, F9Chord,
};

std::string family_name(Family f);

struct Classification {
    Family family = Family::NotCritical;
    // Alignment of the instance onto the canonical shape: outer rotation and
    // reflection such that outer[(rotation +/- i)] plays the role of c_{i+1}.
    int rotation = 0;
    bool reflected = false;
    std::string detail;
};

// G is C-critical iff E(G) strictly contains E(C) and every non-C edge has a
// precoloring extending to G-e but not to G.  Single edge deletions suffice
// because extension is monotone under taking subgraphs.
CriticalityVerdict is_critical(const PlaneGraph& g);

// Memoized by canonical form; used for the recursive interior condition.
bool is_critical_cached(const PlaneGraph& g);
void clear_criticality_cache();

// Every non-facial cycle of length <= 8 bounds a critical disk.
bool interior_condition(const PlaneGraph& g);

Classification classify(const PlaneGraph& g);

}  // namespace trifree
