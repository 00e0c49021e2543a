#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gs2/curve.hpp"
#include "gs2/formulas.hpp"
#include "gs2/errors.hpp"

using namespace gs2;

TEST_CASE("tower_level structure") {
    CHECK(tower_level(1).layers.empty());
    CHECK(tower_level(1).id == "T1");
    CurveSpec t4 = tower_level(4);
    CHECK(t4.layers.size() == 3);
    CHECK(t4.base_var == "x1");
    CHECK(t4.layers[2].var == "x4");
    CHECK_THROWS_AS(tower_level(0), DomainError);
}

TEST_CASE("level-2 affine locus over F_4 has 4 points") {
    auto F = FieldSpec::make_field(1);
    CurveSpec t2 = tower_level(2);
    int count = 0;
    for (FieldElement x = 0; x < 4; ++x) {
        if (x == 0 || x == 1) continue;
        auto rhs = eval_expr(t2.layers[0].rhs, *F, std::array<FieldElement, 1>{x});
        REQUIRE(rhs);
        if (F->abs_trace(*rhs) == 0) count += 2;
    }
    CHECK(count == 4); // x1 in {g, g+1}, two roots each
}

TEST_CASE("quotient curve rhs has a pole at x = gamma^2 (u0) / gamma (u1)") {
    auto F = FieldSpec::make_field(1);
    FieldElement g = F->gamma();
    CurveSpec q0 = quotient_curve(3, QuotientVariant::u0);
    CurveSpec q1 = quotient_curve(3, QuotientVariant::u1);
    CHECK(!eval_expr(q0.layers[0].rhs, *F, std::array<FieldElement, 1>{F->square(g)}));
    CHECK(eval_expr(q0.layers[0].rhs, *F, std::array<FieldElement, 1>{g}));
    CHECK(!eval_expr(q1.layers[0].rhs, *F, std::array<FieldElement, 1>{g}));
    CHECK(eval_expr(q1.layers[0].rhs, *F, std::array<FieldElement, 1>{F->square(g)}));
    // and on the shared pole x = 1
    CHECK(!eval_expr(q0.layers[0].rhs, *F, std::array<FieldElement, 1>{1}));
}

TEST_CASE("tower chain: no interior poles for x1 outside {0,1} (exhaustive k <= 3)") {
    for (int k : {1, 2, 3}) {
        auto F = FieldSpec::make_field(k);
        CurveSpec t5 = tower_level(5);
        for (FieldElement x1 = 2; x1 < F->order(); ++x1) {
            // walk every live branch; rhs must never pole
            std::vector<std::vector<FieldElement>> frontier{{x1}};
            for (const auto& layer : t5.layers) {
                std::vector<std::vector<FieldElement>> next;
                for (auto& vars : frontier) {
                    auto rhs = eval_expr(layer.rhs, *F, vars);
                    REQUIRE(rhs);
                    auto y = F->solve_as(*rhs);
                    if (!y) continue;
                    auto a = vars, b = vars;
                    a.push_back(*y);
                    b.push_back(*y ^ 1);
                    next.push_back(std::move(a));
                    next.push_back(std::move(b));
                }
                frontier = std::move(next);
            }
        }
    }
}

TEST_CASE("verify_minpoly holds on sampled points") {
    CHECK(verify_minpoly(200));
}

TEST_CASE("shifted quotient structure and the generator identity") {
    CurveSpec f41 = shifted_quotient(6, {1});
    CHECK(f41.id == "F41shift");
    CHECK(f41.base_var == "x2");
    REQUIRE(f41.layers.size() == 3);
    CHECK(f41.layers[0].var == "x3");
    CHECK(f41.layers[1].var == "x4");
    CHECK(f41.layers[2].var == "u");

    // degenerate shift list: same curve as the plain quotient
    CHECK(curve_to_json(shifted_quotient(6, {})) ==
          curve_to_json(quotient_curve(6, QuotientVariant::u0)));

    CHECK_THROWS_AS(shifted_quotient(6, {1, 2}), DomainError);
    CHECK_THROWS_AS(shifted_quotient(6, {5}), DomainError);
    CHECK_THROWS_AS(shifted_quotient(6, {0}), DomainError);

    // rebasing: the two deeper shifted curves in the level-6 recursion are the
    // same curve at different levels
    CHECK(curve_to_json(shifted_quotient(5, {1})) == curve_to_json(curve_by_id("F31shift")));

    // (u + 1/x1)^2 + (u + 1/x1) = 1/(x2^2+x2) + g(x4) on concrete points
    auto F = FieldSpec::make_field(3);
    std::mt19937_64 rng(17);
    CurveSpec t4 = tower_level(4);
    CurveSpec q6 = quotient_curve(6, QuotientVariant::u0);
    int done = 0;
    while (done < 100) {
        FieldElement x1 = rng() % F->order();
        if (x1 == 0 || x1 == 1) continue;
        std::vector<FieldElement> vars{x1};
        bool ok = true;
        for (const auto& layer : t4.layers) {
            auto rhs = eval_expr(layer.rhs, *F, vars);
            if (!rhs) { ok = false; break; }
            auto y = F->solve_as(*rhs);
            if (!y) { ok = false; break; }
            vars.push_back((rng() & 1) ? *y : (*y ^ 1));
        }
        if (!ok) continue;
        auto gx4 = eval_expr(q6.layers.back().rhs, *F, vars); // g(x4) over x1..x4
        if (!gx4) continue;
        auto u = F->solve_as(*gx4);
        if (!u) continue;
        FieldElement v = *u ^ F->invert(x1);
        FieldElement lhs = F->square(v) ^ v;
        std::array<FieldElement, 3> rebased{vars[1], vars[2], vars[3]};
        auto rhs = eval_expr(f41.layers.back().rhs, *F, rebased);
        REQUIRE(rhs);
        CHECK(lhs == *rhs);
        ++done;
    }
}

TEST_CASE("curve json round-trip") {
    for (const auto& c : {tower_level(4), quotient_curve(5, QuotientVariant::u1),
                          shifted_quotient(6, {1})}) {
        CurveSpec back = curve_from_json(curve_to_json(c));
        CHECK(curve_to_json(back) == curve_to_json(c));
        CHECK(back.id == c.id);
    }
}

TEST_CASE("curve_by_id") {
    CHECK(curve_by_id("T3").id == "T3");
    CHECK(curve_by_id("Q4u0").id == "Q4u0");
    CHECK(curve_by_id("Q4u1").id == "Q4u1");
    CHECK(curve_by_id("F41shift").layers.size() == 3);
    CHECK_THROWS_AS(curve_by_id("bogus"), UsageError);
}

TEST_CASE("genus formula") {
    CHECK(genus_formula(1) == 0);
    CHECK(genus_formula(2) == 1);
    CHECK(genus_formula(3) == 3);
    CHECK(genus_formula(4) == 9);
    CHECK(genus_formula(5) == 21);
    CHECK(genus_formula(6) == 49);
}

TEST_CASE("dimension formulas") {
    CHECK(dim_y(4) == 8);
    CHECK(deg_ly(4) == 16);
    CHECK(dim_y(3) == 3);
    CHECK(deg_ly(3) == 6);
    for (int n = 3; n <= 10; ++n) CHECK(deg_ly(n) == 2 * dim_y(n));
    CHECK(dim_chain(4).dimX == 23);
    CHECK(dim_chain(3).dimX == 9);
    for (int n = 3; n <= 10; ++n) CHECK(dim_chain(n).dimY == dim_y(n));
}

TEST_CASE("Deuring-Shafarevich p-rank") {
    CHECK(ds_prank(3, 4) == 3); // equals g(T_3)
    CHECK(ds_prank(3, 4) == genus_formula(3));
    for (int n = 3; n <= 8; ++n) CHECK(ds_prank_identity(n));
    CHECK_THROWS_AS(ds_prank(3, 2), DomainError);
}
