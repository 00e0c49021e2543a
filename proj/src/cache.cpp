#include "gs2/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "gs2/errors.hpp"
#include "gs2/gf2m.hpp"

namespace gs2 {

namespace {

nlohmann::ordered_json table_json(const CountTable& t) {
    nlohmann::ordered_json j;
    j["curve"] = t.curve_id;
    j["q"] = t.q;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : t.rows)
        j["rows"].push_back({{"k", r.k},
                             {"affine", r.affine},
                             {"bad", r.bad},
                             {"total", r.total}});
    return j;
}

CountTable table_from(const nlohmann::ordered_json& j) {
    CountTable t;
    t.curve_id = j.at("curve").get<std::string>();
    t.q = j.at("q").get<int>();
    for (const auto& r : j.at("rows"))
        t.rows.push_back({r.at("k").get<int>(), r.at("affine").get<std::int64_t>(),
                          r.at("bad").get<std::int64_t>(),
                          r.at("total").get<std::int64_t>()});
    return t;
}

} // namespace

std::string count_table_to_json(const CountTable& t) { return table_json(t).dump(); }

CountTable count_table_from_json(const std::string& text) {
    return table_from(nlohmann::ordered_json::parse(text));
}

std::string lpoly_to_json(const LPoly& L) {
    nlohmann::ordered_json j;
    j["g"] = L.g;
    j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : L.coeffs) j["coeffs"].push_back(c.get_str());
    return j.dump();
}

LPoly lpoly_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    LPoly L;
    L.g = j.at("g").get<int>();
    for (const auto& c : j.at("coeffs"))
        L.coeffs.emplace_back(c.get<std::string>());
    return L;
}

std::string CountCache::fingerprint() {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (int m = 2; m <= 64; m += 2) {
        mix(static_cast<std::uint64_t>(m));
        mix(reduction_poly_low(m));
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // fresh cache
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    in.close();
    try {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
        if (j.at("version").get<int>() != 1)
            throw IoError("unsupported cache version");
        std::string fp = fingerprint();
        for (const auto& [key, val] : j.at("entries").items()) {
            if (val.at("fingerprint").get<std::string>() != fp)
                continue; // foreign reduction table: treat as absent
            entries_[key] = table_from(val);
        }
    } catch (const std::exception&) {
        // quarantine, never silently drop
        std::error_code ec;
        std::filesystem::rename(path_, path_ + ".corrupt", ec);
        entries_.clear();
    }
}

std::optional<CountTable> CountCache::lookup(const std::string& curve_id) const {
    auto it = entries_.find(curve_id);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::update(const CountTable& table) {
    CountTable& slot = entries_[table.curve_id];
    slot.curve_id = table.curve_id;
    slot.q = table.q;
    for (const auto& r : table.rows) {
        if (const CountRow* old = slot.find(r.k)) {
            if (old->total != r.total || old->affine != r.affine || old->bad != r.bad)
                throw CountInconsistency("cache row for " + table.curve_id + " k=" +
                                         std::to_string(r.k) +
                                         " contradicts an existing entry");
            continue;
        }
        slot.rows.push_back(r);
    }
    std::sort(slot.rows.begin(), slot.rows.end(),
              [](const CountRow& a, const CountRow& b) { return a.k < b.k; });
}

void CountCache::save() const {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["entries"] = nlohmann::ordered_json::object();
    std::string fp = fingerprint();
    for (const auto& [key, table] : entries_) {
        nlohmann::ordered_json e = table_json(table);
        e["fingerprint"] = fp;
        j["entries"][key] = e;
    }
    std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw IoError("cannot write cache temp file " + tmp);
        out << j.dump(1) << "\n";
        if (!out.good()) throw IoError("short write to " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
    if (ec) throw IoError("atomic rename to " + path_ + " failed: " + ec.message());
}

CountTable count_range_cached(const CurveSpec& curve, int k_max,
                              const CountOptions& opts, CountCache* cache) {
    CountTable cached;
    if (cache) {
        if (auto hit = cache->lookup(curve.id)) cached = *hit;
    }
    CountTable out;
    out.curve_id = curve.id;
    bool grew = false;
    for (int k = 1; k <= k_max; ++k) {
        if (const CountRow* row = cached.find(k)) {
            out.rows.push_back(*row);
            continue;
        }
        if (projected_cost(curve, k) > opts.budget) break;
        out.rows.push_back(count_places(curve, k, opts));
        grew = true;
    }
    if (cache && grew) {
        cache->update(out);
        cache->save();
    }
    return out;
}

} // namespace gs2
