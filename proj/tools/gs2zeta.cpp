#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gs2/cache.hpp"
#include "gs2/config.hpp"
#include "gs2/errors.hpp"
#include "gs2/report.hpp"
#include "gs2/verify.hpp"

using namespace gs2;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

void emit_error(const std::string& type, const std::string& message) {
    nlohmann::json j{{"error", {{"type", type}, {"message", message}}}};
    std::cerr << j.dump() << "\n";
}

TowerOptions tower_options(const Config& cfg, CountCache* cache) {
    TowerOptions opts;
    opts.count.threads = cfg.threads;
    opts.count.budget = cfg.budget;
    opts.g_max_leaf = cfg.g_max_leaf;
    opts.excess_rows = cfg.excess_rows;
    opts.max_k = cfg.max_k;
    opts.cache = cache;
    return opts;
}

int cmd_count(const Config& cfg, const std::string& id, int k) {
    CurveSpec curve = curve_by_id(id);
    CountCache cache(cfg.cache_path);
    CountOptions co;
    co.threads = cfg.threads;
    co.budget = cfg.budget;
    CountTable table = count_range_cached(curve, k, co, &cache);
    const CountRow* row = table.find(k);
    if (!row) {
        emit_error("BudgetExceeded", "projected cost of " + id + " at k=" +
                                         std::to_string(k) + " exceeds the budget");
        return kExitUsage;
    }
    if (cfg.format == "json")
        std::cout << count_row_to_json(*row) << "\n";
    else
        std::cout << render_count_row_text(id, *row) << "\n";
    return kExitOk;
}

int cmd_lpoly(const Config& cfg, const std::string& id, int g) {
    CurveSpec curve = curve_by_id(id);
    CountCache cache(cfg.cache_path);
    TowerOptions opts = tower_options(cfg, &cache);
    LPoly L = lpoly_for_curve(curve, g, opts);
    if (cfg.format == "json")
        std::cout << lpoly_to_json(L) << "\n";
    else
        std::cout << poly_to_string(L.coeffs) << "\n";
    return kExitOk;
}

int cmd_tower(const Config& cfg, int n) {
    CountCache cache(cfg.cache_path);
    TowerOptions opts = tower_options(cfg, &cache);
    TowerResult r = compute_tower(n, opts);
    {
        std::ofstream out(cfg.reports_path, std::ios::trunc);
        if (out) out << reports_to_json(r.reports) << "\n";
    }
    if (cfg.format == "json")
        std::cout << reports_to_json(r.reports) << "\n";
    else
        std::cout << render_reports_text(r.reports);
    return kExitOk;
}

int cmd_report(const Config& cfg) {
    std::ifstream in(cfg.reports_path);
    if (!in) {
        emit_error("IoError", "no report file at " + cfg.reports_path +
                                  "; run the tower command first");
        return kExitUsage;
    }
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::vector<FactorReport> reports = reports_from_json(text);
    if (cfg.format == "json")
        std::cout << reports_to_json(reports) << "\n";
    else
        std::cout << render_reports_text(reports);
    return kExitOk;
}

int cmd_verify(const Config& cfg) {
    VerifySummary s = verify_paper(cfg, std::cout);
    return s.all_pass() ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta functions of the second Garcia-Stichtenoth tower over F4"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::string> cache_path;
    std::optional<std::string> format;
    std::optional<int> threads;
    std::optional<std::int64_t> budget;
    std::optional<int> g_max_leaf;
    std::optional<std::string> kernel;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--cache", cache_path, "count cache path");
    app.add_option("--format", format, "output format: text|json");
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--budget", budget, "per-k projected point budget");
    app.add_option("--g-max-leaf", g_max_leaf, "largest genus counted directly");
    app.add_option("--kernel", kernel, "carry-less multiply kernel override");

    std::string count_id, lpoly_id;
    int count_k = 1, lpoly_g = 0, tower_n = 5;
    CLI::App* c_count = app.add_subcommand("count", "count degree-one places of a curve");
    c_count->add_option("curve", count_id, "curve id (T<n>, Q<n>u0, Q<n>u1, F<m>1shift)")
        ->required();
    c_count->add_option("--k", count_k, "extension degree over F4")->required();
    CLI::App* c_lpoly = app.add_subcommand("lpoly", "reconstruct an L-polynomial from counts");
    c_lpoly->add_option("curve", lpoly_id, "curve id")->required();
    c_lpoly->add_option("--g", lpoly_g, "genus")->required();
    CLI::App* c_tower = app.add_subcommand("tower", "run the zeta recursion up to level n");
    c_tower->add_option("--n", tower_n, "top level")->required();
    CLI::App* c_verify =
        app.add_subcommand("verify-paper", "verify against the published zeta data");
    CLI::App* c_report = app.add_subcommand("report", "render cached tower reports");
    std::string curve_id_arg;
    CLI::App* c_curve = app.add_subcommand("curve", "print a curve descriptor as JSON");
    c_curve->add_option("curve", curve_id_arg, "curve id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        Config cfg = load_config(config_path);
        if (cache_path) cfg.cache_path = *cache_path;
        if (format) cfg.format = *format;
        if (threads) cfg.threads = *threads;
        if (budget) cfg.budget = *budget;
        if (g_max_leaf) cfg.g_max_leaf = *g_max_leaf;
        if (kernel) cfg.kernel = *kernel;
        if (cfg.format != "text" && cfg.format != "json")
            throw UsageError("format must be text or json");
        if (!cfg.kernel.empty() && !set_active_kernel(cfg.kernel))
            throw UsageError("unknown or unavailable kernel '" + cfg.kernel + "'");

        if (*c_count) return cmd_count(cfg, count_id, count_k);
        if (*c_lpoly) return cmd_lpoly(cfg, lpoly_id, lpoly_g);
        if (*c_tower) return cmd_tower(cfg, tower_n);
        if (*c_verify) return cmd_verify(cfg);
        if (*c_report) return cmd_report(cfg);
        if (*c_curve) {
            std::cout << curve_to_json(curve_by_id(curve_id_arg)) << "\n";
            return kExitOk;
        }
        emit_error("UsageError", "no subcommand");
        return kExitUsage;
    } catch (const UsageError& e) {
        emit_error(e.type, e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        // reachable through request parameters (levels out of reach of the
        // configured leaf bound, malformed ids, bad ranges)
        emit_error(e.type, e.what());
        return kExitUsage;
    } catch (const Error& e) {
        emit_error(e.type, e.what());
        // verification-style failures (falsified identities, inconsistent
        // counts) are reported distinctly from internal faults
        if (e.type == "RelationFalsified" || e.type == "CountInconsistency")
            return kExitVerification;
        return kExitInternal;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return kExitInternal;
    }
}
