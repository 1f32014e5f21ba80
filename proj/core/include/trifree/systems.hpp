// Registry of the named constraint systems behind the case analysis for a
// precolored 9-cycle, one per claim, plus the golden-table bookkeeping used
// by the `tables` report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trifree/constraints.hpp"

namespace trifree {

std::vector<std::string> system_ids();
ConstraintSystem named_system(const std::string& id);

// Expected solution count where the source text states one (or where the
// frozen golden file pins it); nullopt for bound-style checks.
std::optional<int> expected_solutions(const std::string& id);

struct TableReport {
    struct Entry {
        std::string id;
        int got = 0;
        int expected = -1;       // -1: no count pinned
        bool rows_checked = false;
        bool ok = false;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_ok = true;
};

// Runs every registry system, compares counts (and row sets when a golden
// file exists under data_dir/golden), and re-checks special invariants.
TableReport reproduce_tables(const std::string& data_dir, int jobs = 1);

}  // namespace trifree
