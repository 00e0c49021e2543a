#pragma once

#include <string>
#include <vector>

#include "gs2/relation.hpp"

namespace gs2 {

// Canonical renderings; byte-for-byte deterministic for a given input (no
// timestamps, fixed ordering).
std::string render_report_text(const FactorReport& r);
std::string render_reports_text(const std::vector<FactorReport>& reports);
std::string report_to_json(const FactorReport& r);
std::string reports_to_json(const std::vector<FactorReport>& reports);
std::vector<FactorReport> reports_from_json(const std::string& text);

std::string render_count_row_text(const std::string& curve_id, const CountRow& row);
std::string count_row_to_json(const CountRow& row);

std::string factored_string(const std::vector<std::pair<ZPoly, int>>& factors);

} // namespace gs2
