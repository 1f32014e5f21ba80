// Intersection patterns of two outer-anchored paths of kind (11), the three
// reduction operations, and the exhaustive enumeration of irreducible
// patterns certifying the existence of common points.
#pragma once

#include <string>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

// Abstract pattern: K1 traversed from u1 (positions 0..k1), K2 traversed
// from v2 (positions 0..k2); crossings pair internal positions.  Segment
// sides alternate inside/outside along K2 starting inside at v2; only the
// two end segments are free when the endpoints coincide.
struct PathPairPattern {
    int k1 = 2, k2 = 2;
    bool same_endpoints = false;
    bool end_v_inside = true;    // drawn side of the segment at v2
    bool end_u_inside = false;   // drawn side of the segment at u2
    std::vector<std::pair<int, int>> crossings;  // (i on K1, j on K2), j ascending
    // Reduction-level view: one tag per K2 edge (0 inside, 1 outside,
    // 2 shared with K1); filled for patterns produced by the enumerator.
    std::vector<int> tags;
};

enum class PatternClass {
    CommonPoint,      // single intersection vertex
    NotKind11,        // endpoint tie-break fails (11)
    Nonfacial4Cycle,  // forces a 4-cycle that cannot bound a face
    Counterexample,   // irreducible, (11), no 4-cycle obstruction
};

struct ClassifiedPattern {
    PathPairPattern pattern;
    PatternClass cls;
    std::string canonical;  // canonical form of the auxiliary plane graph
};

// Applies the three reductions (shared-edge split, same-side split, 4-face
// reroute) until none applies.  Never lengthens either path.
PathPairPattern reduce(const PathPairPattern& p);

// All irreducible patterns with |K1| <= max_k1 and |K2| <= max_k2 (the pair
// is unordered; representatives use |K1| >= |K2|), deduplicated under path
// swap and reflection via the auxiliary embedding's canonical form.
std::vector<ClassifiedPattern> enumerate_irreducible(int max_k1, int max_k2,
                                                     bool same_endpoints);

// The auxiliary plane graph of a pattern (outer arcs subdivided by dummy
// vertices so that path girth is faithful); throws GraphError if the data
// does not embed.
PlaneGraph pattern_embedding(const PathPairPattern& p, int order_at_first = 0,
                             int order_at_last = 0);

}  // namespace trifree
