// Exhaustive generation of connected triangle-free plane graphs with a fixed
// outer cycle and bounded interior, each outer-rooted isomorphism class
// exactly once.
#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trifree/criticality.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct GenConfig {
    int outer_len = 9;            // 4..9
    int max_internal = 0;         // <= 12
    int max_face = 9;             // internal faces use lengths 4..max_face
    int jobs = 1;
};

// Calls sink for every generated graph (deduplicated across the rotations
// and reflections of the outer cycle); returns the number emitted.
long long enumerate_graphs(const GenConfig& cfg,
                           const std::function<void(const PlaneGraph&)>& sink);

struct CrosscheckReport {
    long long graphs = 0;
    long long criticals = 0;
    long long disagreements = 0;
    long long pattern_mismatches = 0;   // NE-set differs from the predicted one
    long long witness_checks = 0;
    long long witness_failures = 0;
    std::map<std::string, long long> family_counts;
    std::vector<std::string> offenders;  // formatted graphs, capped
};

struct CrosscheckOptions {
    bool check_patterns = false;   // compare NE sets with family predictions
    bool check_witnesses = false;  // run the cut-witness search on every
                                   // non-extendable precoloring
};

CrosscheckReport crosscheck(const GenConfig& cfg, const CrosscheckOptions& opt);

// Exact non-extendable sets predicted by the characterizations for the
// 6-cycle and 7-cycle families (and the k-2 face rule for 9b); nullopt when
// no closed-form prediction applies.
std::optional<std::vector<Precoloring>> predicted_nonextendable(
    const PlaneGraph& g, const Classification& c);

}  // namespace trifree
