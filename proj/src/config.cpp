#include "gs2/config.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "gs2/errors.hpp"

namespace gs2 {

Config load_config(const std::optional<std::string>& path) {
    Config c;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw UsageError("cannot read config file " + *path);
        nlohmann::json j = nlohmann::json::parse(in, nullptr, true, true);
        if (j.contains("max_k")) c.max_k = j["max_k"].get<int>();
        if (j.contains("budget")) c.budget = j["budget"].get<std::int64_t>();
        if (j.contains("g_max_leaf")) c.g_max_leaf = j["g_max_leaf"].get<int>();
        if (j.contains("threads")) c.threads = j["threads"].get<int>();
        if (j.contains("excess_rows")) c.excess_rows = j["excess_rows"].get<int>();
        if (j.contains("cache")) c.cache_path = j["cache"].get<std::string>();
        if (j.contains("reports")) c.reports_path = j["reports"].get<std::string>();
        if (j.contains("format")) c.format = j["format"].get<std::string>();
        if (j.contains("kernel")) c.kernel = j["kernel"].get<std::string>();
    }
    auto env = [](const char* name) -> std::optional<std::string> {
        const char* v = std::getenv(name);
        if (v && *v) return std::string(v);
        return std::nullopt;
    };
    if (auto v = env("GS2ZETA_CACHE")) c.cache_path = *v;
    if (auto v = env("GS2ZETA_REPORTS")) c.reports_path = *v;
    if (auto v = env("GS2ZETA_THREADS")) c.threads = std::stoi(*v);
    if (auto v = env("GS2ZETA_BUDGET")) c.budget = std::stoll(*v);
    if (auto v = env("GS2ZETA_G_MAX_LEAF")) c.g_max_leaf = std::stoi(*v);
    if (auto v = env("GS2ZETA_FORMAT")) c.format = *v;
    if (auto v = env("GS2ZETA_KERNEL")) c.kernel = *v;
    if (c.budget < 0 || c.threads < 0 || c.g_max_leaf < 1 || c.excess_rows < 0)
        throw UsageError("config values must be positive");
    if (c.format != "text" && c.format != "json")
        throw UsageError("format must be text or json");
    return c;
}

} // namespace gs2
