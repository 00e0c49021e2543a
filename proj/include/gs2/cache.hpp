#pragma once

#include <map>
#include <optional>
#include <string>

#include "gs2/count.hpp"
#include "gs2/zpoly.hpp"

namespace gs2 {

std::string count_table_to_json(const CountTable& t);
CountTable count_table_from_json(const std::string& text);
std::string lpoly_to_json(const LPoly& L); // big coefficients as decimal strings
LPoly lpoly_from_json(const std::string& text);

// Persistent count cache: a single JSON document mapping curve id to its
// CountTable, keyed alongside a fingerprint of the reduction-polynomial
// table. Entries with a foreign fingerprint are ignored. Rows are
// append-only; a contradicting row is an error, not an update. Writes go
// through a temp file + atomic rename; a corrupt cache file is quarantined
// (renamed to <path>.corrupt), never silently dropped.
class CountCache {
public:
    explicit CountCache(std::string path);

    std::optional<CountTable> lookup(const std::string& curve_id) const;
    void update(const CountTable& table);
    void save() const;

    const std::string& path() const { return path_; }

    // FNV-1a over the reduction-polynomial table, 16 hex digits.
    static std::string fingerprint();

private:
    std::string path_;
    std::map<std::string, CountTable> entries_;
};

// count_range with cache consultation: cached rows are reused, missing rows
// computed and written back (single writer).
CountTable count_range_cached(const CurveSpec& curve, int k_max,
                              const CountOptions& opts, CountCache* cache);

} // namespace gs2
