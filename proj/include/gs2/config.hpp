#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace gs2 {

struct Config {
    int max_k = 0;                       // 0: derive from genus + excess rows
    std::int64_t budget = 1'000'000'000; // projected base points x width per k
    int g_max_leaf = 12;
    int threads = 0;                     // 0: hardware concurrency
    int excess_rows = 2;
    std::string cache_path = "gs2zeta-cache.json";
    std::string reports_path = "gs2zeta-reports.json";
    std::string format = "text"; // text | json
    std::string kernel;          // optional clmul kernel override
};

// Defaults, then the JSON config file (if given), then GS2ZETA_* environment
// variables, then command-line flags (applied by the CLI).
Config load_config(const std::optional<std::string>& path);

} // namespace gs2
