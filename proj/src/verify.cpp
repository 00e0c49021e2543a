#include "gs2/verify.hpp"

#include <chrono>
#include <random>
#include <ostream>
#include <sstream>

#include "gs2/errors.hpp"
#include "gs2/places.hpp"
#include "gs2/refdata.hpp"

namespace gs2 {

namespace {

struct Runner {
    std::ostream& out;
    VerifySummary& summary;

    void item(const std::string& name, bool pass, const std::string& detail = "") {
        summary.items.push_back({name, pass, detail});
        out << (pass ? "PASS" : "FAIL") << "  " << name;
        if (!detail.empty()) out << " -- " << detail;
        out << "\n" << std::flush;
    }
};

mpz_class powz(int b, int e) {
    mpz_class r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

TowerOptions tower_options(const Config& cfg, CountCache* cache) {
    TowerOptions opts;
    opts.count.threads = cfg.threads;
    opts.count.budget = cfg.budget;
    opts.g_max_leaf = cfg.g_max_leaf;
    opts.excess_rows = cfg.excess_rows;
    opts.cache = cache;
    return opts;
}

} // namespace

VerifySummary verify_paper(const Config& cfg, std::ostream& out) {
    VerifySummary summary;
    Runner run{out, summary};
    CountCache cache(cfg.cache_path);
    TowerOptions opts = tower_options(cfg, &cache);

    // --- criterion 1: exact reproduction through level 5 ---
    auto t0 = std::chrono::steady_clock::now();
    TowerResult tower;
    try {
        tower = compute_tower(6, opts);
    } catch (const Error& e) {
        run.item("criterion 1: recursion through level 5", false,
                 std::string(e.type) + ": " + e.what());
        return summary;
    }
    auto t1 = std::chrono::steady_clock::now();
    double tower_seconds = std::chrono::duration<double>(t1 - t0).count();
    summary.reports = tower.reports;

    bool lv5_exact = true;
    std::string lv5_detail;
    for (const auto& rep : tower.reports) {
        if (rep.level > 5) continue;
        if (rep.ref_match != RefMatch::Exact) {
            lv5_exact = false;
            lv5_detail = "level " + std::to_string(rep.level) + ": " + rep.ref_diff;
        }
    }
    {
        std::ostringstream d;
        d << "levels 2..5 coefficient-exact; tower recursion took " << tower_seconds
          << "s";
        run.item("criterion 1: levels 2-5 reproduce the published L-polynomials",
                 lv5_exact, lv5_exact ? d.str() : lv5_detail);
    }

    // --- criterion 2: quotient L-polynomials by direct counting ---
    {
        bool ok = true;
        std::string detail;
        for (const std::string base : {"Q4", "Q5"}) {
            LPoly u0, u1;
            try {
                CurveSpec c0 = curve_by_id(base + "u0");
                CurveSpec c1 = curve_by_id(base + "u1");
                int genus =
                    static_cast<int>(RelationTree::expected_degree(base + "u0") / 2);
                u0 = lpoly_for_curve(c0, genus, opts);
                u1 = lpoly_for_curve(c1, genus, opts);
            } catch (const Error& e) {
                ok = false;
                detail = e.what();
                break;
            }
            ZPoly printed = published_lpoly(base + "u0")->expanded();
            if (!poly_equal(u0.coeffs, printed)) {
                ok = false;
                detail = base + "u0 differs from the published value";
            }
            if (!poly_equal(u0.coeffs, u1.coeffs)) {
                ok = false;
                detail = base + ": u0 and u1 L-polynomials differ";
            }
        }
        run.item("criterion 2: level-4/5 quotients by direct counting, u0 = u1", ok,
                 detail);
    }

    // --- criterion 3: level 6 ---
    const FactorReport* rep6 = nullptr;
    for (const auto& r : tower.reports)
        if (r.level == 6) rep6 = &r;
    if (!rep6) {
        run.item("criterion 3: level 6", false, "no level-6 report");
        return summary;
    }
    run.item("criterion 3a: level-6 degree is 98 = 2*genus", rep6->degree_ok,
             "degree " + std::to_string(degree(rep6->L.coeffs)));
    {
        bool all = true;
        std::string bad;
        for (const auto& c : tower.checks)
            if (!c.exact) {
                all = false;
                bad = c.description;
            }
        run.item("criterion 3b: every covering relation re-multiplies exactly", all,
                 all ? std::to_string(tower.checks.size()) + " relation checks" : bad);
    }
    run.item("criterion 3c: level-5 polynomial divides level 6",
             rep6->divisible_by_previous);
    run.item("criterion 3d: level-6 functional equation exact",
             functional_equation_holds(rep6->L));
    {
        bool ok = true;
        std::string detail;
        CurveSpec t6 = tower_level(6);
        CountOptions co = opts.count;
        try {
            CountTable table = count_range_cached(t6, 10, co, &cache);
            ok = table.find(10) != nullptr && verify_excess(rep6->L, table);
            detail = std::to_string(table.rows.size()) + " rows enumerated";
        } catch (const Error& e) {
            ok = false;
            detail = e.what();
        }
        run.item("criterion 3e: level-6 place counts k=1..10 by direct enumeration",
                 ok, detail);
    }
    run.item("criterion 3f: discrepancy report against the published level-6 value",
             rep6->ref_match == RefMatch::Mismatch && !rep6->ref_diff.empty(),
             rep6->ref_diff);
    {
        // the two published helper values behind the level-6 derivation are
        // also inconsistent with the certified counts; detecting both is the
        // expected outcome
        bool ok = true;
        std::string detail;
        auto it = tower.lpolys.find("F41shift");
        if (it != tower.lpolys.end()) {
            ZPoly printed = published_lpoly("F41shift")->expanded();
            ok = !poly_equal(it->second.coeffs, printed);
            detail = "count-certified shifted-curve value differs from the printed "
                     "one (quartic constant and sextic signs); printed degree-46 "
                     "inner-curve value contradicts the degree ledger (expected " +
                     std::to_string(RelationTree::expected_degree("Q5u0")) + ", printed " +
                     std::to_string(degree(published_lpoly("Q6helper46")->expanded()))
                     + ")";
        } else {
            ok = false;
            detail = "shifted leaf missing from the recursion";
        }
        run.item("criterion 3f addendum: published level-6 helper values flagged", ok,
                 detail);
    }

    // --- criterion 4: ordinarity ---
    {
        bool ok = true;
        std::string detail;
        for (const auto& rep : tower.reports) {
            int g = static_cast<int>(genus_formula(rep.level));
            if (prank(rep.L) != g || !rep.ordinary) {
                ok = false;
                detail = "level " + std::to_string(rep.level);
            }
        }
        run.item("criterion 4: deg(L mod 2) = genus for levels 2-6 (ordinary)", ok,
                 detail);
    }

    // --- criterion 5: the p-rank identity ---
    {
        bool ok = true;
        for (int n = 3; n <= 8; ++n)
            if (!ds_prank_identity(n)) ok = false;
        bool numeric = false;
        try {
            numeric = ds_prank(3, 4) == genus_formula(3);
        } catch (const Error&) {
        }
        run.item("criterion 5: ramification p-rank identity (n=3..8, numeric n=3)",
                 ok && numeric);
    }

    // --- criterion 6: structure formulas ---
    {
        bool ok = true;
        std::string detail;
        for (int n = 3; n <= 10; ++n)
            if (dim_chain(n).dimY != dim_y(n)) {
                ok = false;
                detail = "dim chain at n=" + std::to_string(n);
            }
        for (int n = 5; n <= 12; ++n) {
            std::int64_t total = 0;
            for (const auto& e : corollary_template(n)) total += e.exponent * e.degree;
            if (total != 2 * genus_formula(n)) {
                ok = false;
                detail = "template degree at n=" + std::to_string(n);
            }
        }
        for (const auto& rep : tower.reports) {
            if (rep.level == 5 && rep.new_factor_degree != deg_ly(3)) {
                ok = false;
                detail = "level-5 new factor degree " +
                         std::to_string(rep.new_factor_degree);
            }
            if (rep.level == 6 && rep.new_factor_degree != deg_ly(4)) {
                ok = false;
                detail = "level-6 new factor degree " +
                         std::to_string(rep.new_factor_degree);
            }
            if (rep.level >= 5 && !rep.template_ok) {
                ok = false;
                detail = "block template at level " + std::to_string(rep.level);
            }
        }
        run.item("criterion 6: dimension ledger, template degrees, new-factor degrees",
                 ok, detail);
    }

    // --- criterion 7: Picard orders ---
    {
        const FactorReport *r4 = nullptr, *r5 = nullptr;
        for (const auto& rep : tower.reports) {
            if (rep.level == 4) r4 = &rep;
            if (rep.level == 5) r5 = &rep;
        }
        bool ok4 = r4 && r4->pic.value == mpz_class(33554432);
        bool ok5 = r5 && r5->pic.value == powz(2, 47) * powz(3, 2) * powz(7, 2);
        run.item("criterion 7a: Pic orders 2^25 at level 4 and 2^47*3^2*7^2 at level 5",
                 ok4 && ok5);
        // The published smoothness product names powers of 2, 3 and 5 only;
        // the computed level-5 order carries 7^2 and no factor 5. Flagging
        // the inconsistency is the expected (passing) outcome.
        bool flagged = false;
        std::string detail;
        if (r5) {
            mpz_class fixed = published_pic_fixed_part(5);
            flagged = r5->pic.value != fixed && r5->pic.value % powz(7, 2) == 0 &&
                      r5->pic.value % 5 != 0;
            std::ostringstream d;
            d << "computed " << r5->pic.value.get_str() << " vs published fixed part "
              << fixed.get_str();
            detail = d.str();
        }
        run.item("criterion 7b: published smoothness formula flagged as inconsistent",
                 flagged, detail);
    }

    // --- criterion 8: property suites ---
    {
        bool ok = true;
        std::string detail;
        // trace kernels, exhaustive m <= 16
        for (int k = 1; k <= 8 && ok; ++k) {
            auto F = FieldSpec::make_field(k);
            std::uint64_t zeros = 0;
            for (FieldElement a = 0; a < F->order(); ++a)
                if (F->abs_trace(a) == 0) ++zeros;
            if (zeros != F->order() / 2) {
                ok = false;
                detail = "trace kernel size at m=" + std::to_string(2 * k);
            }
        }
        // field axioms on random samples
        std::mt19937_64 rng(2026);
        for (int k : {2, 5, 11, 26}) {
            auto F = FieldSpec::make_field(k);
            std::uint64_t mask = (1ull << F->m()) - 1;
            for (int i = 0; i < 25; ++i) {
                FieldElement a = rng() & mask, b = rng() & mask, c = rng() & mask;
                if (F->mul(a, F->mul(b, c)) != F->mul(F->mul(a, b), c) ||
                    F->mul(a, b ^ c) != (F->mul(a, b) ^ F->mul(a, c)) ||
                    (a != 0 && F->mul(a, F->invert(a)) != 1)) {
                    ok = false;
                    detail = "field axiom at k=" + std::to_string(k);
                }
            }
        }
        run.item("criterion 8a: field axioms and trace kernels (exhaustive m<=16)",
                 ok, detail);
    }
    {
        bool ok = true;
        for (const auto& ref : published_lpolys()) {
            ZPoly p = ref.expanded();
            int d = degree(p);
            if (d <= 0 || d % 2 != 0) continue; // skip the inconsistent entries
            if (p[0] != 1) continue;
            int g = d / 2;
            LPoly L{g, p};
            if (!functional_equation_holds(L)) continue;
            LPoly back = from_power_sums(power_sums_of(p, g), g);
            if (!poly_equal(back.coeffs, p)) ok = false;
        }
        run.item("criterion 8b: power-sum round-trips on the published polynomials",
                 ok);
    }
    {
        bool ok = true;
        std::string detail;
        for (int k : {1, 2}) {
            auto F = FieldSpec::make_field(k);
            for (const auto& curve : {tower_level(3), quotient_curve(4, QuotientVariant::u0)}) {
                BadLocusResult r = resolve_bad_full(curve, F);
                int layers = static_cast<int>(curve.layers.size());
                for (const auto& seed : r.seeds) {
                    long long total = 0;
                    for (int e : seed.place_e) total += e;
                    for (auto [e, layer] : seed.inert_e_layer)
                        total += static_cast<long long>(e) << (layers - layer);
                    if (total != (1ll << layers)) {
                        ok = false;
                        detail = curve.id + " k=" + std::to_string(k);
                    }
                }
            }
        }
        // precision-doubling stability of the local resolution
        for (int k : {1, 2}) {
            auto F = FieldSpec::make_field(k);
            for (int n : {3, 4, 5}) {
                int prec0 = 8 * (n - 1) + 16;
                if (resolve_bad(tower_level(n), F) !=
                    resolve_bad(tower_level(n), F, 2 * prec0)) {
                    ok = false;
                    detail = "precision doubling changed T" + std::to_string(n);
                }
            }
        }
        run.item("criterion 8c: degree bookkeeping and precision-doubling stability",
                 ok, detail);
    }
    {
        CountOptions serial = opts.count;
        serial.threads = 1;
        CountOptions par = opts.count;
        par.threads = 4;
        bool ok = affine_count(tower_level(4), 4, serial) ==
                  affine_count(tower_level(4), 4, par);
        run.item("criterion 8d: parallel scan equals serial scan", ok);
    }
    {
        bool ok = true;
        ZPoly B1{mpz_class(1), mpz_class(3), mpz_class(4)};
        LPoly L2{1, B1};
        LPoly L3{3, pow_poly(B1, 3)};
        for (int k = 1; k <= 3 && ok; ++k) {
            CountOptions co = opts.count;
            if (count_places(tower_level(2), k, co).total != predicted_count(L2, k))
                ok = false;
            if (count_places(tower_level(3), k, co).total != predicted_count(L3, k))
                ok = false;
        }
        run.item("criterion 8e: oracle equivalence of level-2/3 counts for k<=3", ok);
    }

    try {
        cache.save();
    } catch (const Error&) {
        // verification outcome does not depend on cache persistence
    }
    return summary;
}

} // namespace gs2
