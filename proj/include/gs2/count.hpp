#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gs2/curve.hpp"

namespace gs2 {

struct CountRow {
    int k = 0;
    std::int64_t affine = 0;
    std::int64_t bad = 0;
    std::int64_t total = 0;
};

struct CountTable {
    std::string curve_id;
    int q = 4;
    std::vector<CountRow> rows; // sorted by k, no duplicates

    const CountRow* find(int k) const {
        for (const auto& r : rows)
            if (r.k == k) return &r;
        return nullptr;
    }
};

struct CountOptions {
    int threads = 0;                       // 0 = hardware concurrency
    std::int64_t budget = 1'000'000'000;   // max projected base points x width per k
};

// Affine tuples over F_{4^k} with x1 outside {0,1} (every value for a bare
// rational line), all layers trace-solvable, all coordinates finite.
std::int64_t affine_count(const CurveSpec& curve, int k, const CountOptions& opts = {});

// Full degree-one place count: affine scan plus the bad-locus seeds plus any
// interior escape places found during the scan.
CountRow count_places(const CurveSpec& curve, int k, const CountOptions& opts = {});

// Rows k = 1..k_max, stopping cleanly once the projected per-k cost
// 4^k * 2^layers exceeds the budget. Partial tables are valid results.
CountTable count_range(const CurveSpec& curve, int k_max, const CountOptions& opts = {});

// Projected enumeration cost of one row.
std::int64_t projected_cost(const CurveSpec& curve, int k);

} // namespace gs2
