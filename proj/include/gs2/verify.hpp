#pragma once

#include <string>
#include <vector>

#include "gs2/config.hpp"
#include "gs2/relation.hpp"

namespace gs2 {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifySummary {
    std::vector<CheckResult> items;
    std::vector<FactorReport> reports; // levels 2..6, for persistence
    bool all_pass() const {
        for (const auto& c : items)
            if (!c.pass) return false;
        return true;
    }
};

// The full verification battery against the published zeta data: exact
// level-by-level reproduction through level 5, quotient counts, the level-6
// recomputation with its discrepancy report, ordinarity, the p-rank
// identity, structure formulas, Picard orders, and the core property
// suites. Prints one line per item to `out` as it goes.
VerifySummary verify_paper(const Config& cfg, std::ostream& out);

} // namespace gs2
