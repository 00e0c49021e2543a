#include "gs2/report.hpp"

#include <sstream>

#include "json.hpp"

#include "gs2/cache.hpp"

namespace gs2 {

std::string factored_string(const std::vector<std::pair<ZPoly, int>>& factors) {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first) os << " ";
        os << "(" << poly_to_string(p) << ")";
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

std::string render_report_text(const FactorReport& r) {
    std::ostringstream os;
    os << "level " << r.level << ":\n";
    os << "  L = " << factored_string(r.factors) << "\n";
    os << "  degree " << degree(r.L.coeffs) << " = 2*genus: "
       << (r.degree_ok ? "ok" : "MISMATCH") << "\n";
    os << "  divisible by previous level: " << (r.divisible_by_previous ? "yes" : "NO")
       << "\n";
    os << "  ordinary (2-rank = genus): " << (r.ordinary ? "yes" : "NO") << "\n";
    if (degree(r.new_factor) > 0)
        os << "  new factor: (" << poly_to_string(r.new_factor) << "), degree "
           << r.new_factor_degree << "\n";
    if (r.level >= 5)
        os << "  block template: " << (r.template_ok ? "ok" : "MISMATCH") << "\n";
    os << "  Pic order = ";
    bool first = true;
    for (const auto& [q, e] : r.pic.factors) {
        if (!first) os << " * ";
        os << q.get_str();
        if (e != 1) os << "^" << e;
        first = false;
    }
    if (r.pic.cofactor != 1) {
        if (!first) os << " * ";
        os << r.pic.cofactor.get_str();
        first = false;
    }
    if (first) os << "1";
    os << " = " << r.pic.value.get_str() << "\n";
    switch (r.ref_match) {
        case RefMatch::Exact: os << "  published value: exact match\n"; break;
        case RefMatch::Mismatch:
            os << "  published value: MISMATCH -- " << r.ref_diff << "\n";
            break;
        case RefMatch::NotPrinted: os << "  published value: none\n"; break;
    }
    return os.str();
}

std::string render_reports_text(const std::vector<FactorReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) os << render_report_text(r);
    return os.str();
}

namespace {

nlohmann::ordered_json poly_json(const ZPoly& p) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& c : p) a.push_back(c.get_str());
    return a;
}

ZPoly poly_from(const nlohmann::ordered_json& a) {
    ZPoly p;
    for (const auto& c : a) p.emplace_back(c.get<std::string>());
    return p;
}

nlohmann::ordered_json report_json(const FactorReport& r) {
    nlohmann::ordered_json j;
    j["level"] = r.level;
    j["lpoly"] = {{"g", r.L.g}, {"coeffs", poly_json(r.L.coeffs)}};
    j["factors"] = nlohmann::ordered_json::array();
    for (const auto& [p, e] : r.factors)
        j["factors"].push_back({{"poly", poly_json(p)}, {"exp", e}});
    j["new_factor"] = poly_json(r.new_factor);
    j["new_factor_degree"] = r.new_factor_degree;
    j["pic"] = {{"value", r.pic.value.get_str()},
                {"cofactor", r.pic.cofactor.get_str()}};
    j["pic"]["factors"] = nlohmann::ordered_json::array();
    for (const auto& [q, e] : r.pic.factors)
        j["pic"]["factors"].push_back({{"prime", q.get_str()}, {"exp", e}});
    j["divisible_by_previous"] = r.divisible_by_previous;
    j["ordinary"] = r.ordinary;
    j["degree_ok"] = r.degree_ok;
    j["template_ok"] = r.template_ok;
    j["published"] = r.ref_match == RefMatch::Exact      ? "exact"
                     : r.ref_match == RefMatch::Mismatch ? "mismatch"
                                                         : "not-printed";
    j["published_diff"] = r.ref_diff;
    return j;
}

FactorReport report_from(const nlohmann::ordered_json& j) {
    FactorReport r;
    r.level = j.at("level").get<int>();
    r.L.g = j.at("lpoly").at("g").get<int>();
    r.L.coeffs = poly_from(j.at("lpoly").at("coeffs"));
    for (const auto& f : j.at("factors"))
        r.factors.emplace_back(poly_from(f.at("poly")), f.at("exp").get<int>());
    r.new_factor = poly_from(j.at("new_factor"));
    r.new_factor_degree = j.at("new_factor_degree").get<std::int64_t>();
    r.pic.value = mpz_class(j.at("pic").at("value").get<std::string>());
    r.pic.cofactor = mpz_class(j.at("pic").at("cofactor").get<std::string>());
    for (const auto& f : j.at("pic").at("factors"))
        r.pic.factors.emplace_back(mpz_class(f.at("prime").get<std::string>()),
                                   f.at("exp").get<int>());
    r.divisible_by_previous = j.at("divisible_by_previous").get<bool>();
    r.ordinary = j.at("ordinary").get<bool>();
    r.degree_ok = j.at("degree_ok").get<bool>();
    r.template_ok = j.at("template_ok").get<bool>();
    std::string pm = j.at("published").get<std::string>();
    r.ref_match = pm == "exact"      ? RefMatch::Exact
                  : pm == "mismatch" ? RefMatch::Mismatch
                                     : RefMatch::NotPrinted;
    r.ref_diff = j.at("published_diff").get<std::string>();
    return r;
}

} // namespace

std::string report_to_json(const FactorReport& r) { return report_json(r).dump(1); }

std::string reports_to_json(const std::vector<FactorReport>& reports) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    return j.dump(1);
}

std::vector<FactorReport> reports_from_json(const std::string& text) {
    std::vector<FactorReport> out;
    for (const auto& j : nlohmann::ordered_json::parse(text)) out.push_back(report_from(j));
    return out;
}

std::string render_count_row_text(const std::string& curve_id, const CountRow& row) {
    std::ostringstream os;
    os << curve_id << " k=" << row.k << ": affine=" << row.affine
       << " bad=" << row.bad << " total=" << row.total;
    return os.str();
}

std::string count_row_to_json(const CountRow& row) {
    nlohmann::ordered_json j{{"k", row.k},
                     {"affine", row.affine},
                     {"bad", row.bad},
                     {"total", row.total}};
    return j.dump();
}

} // namespace gs2
