#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gs2/zeta.hpp"
#include "gs2/errors.hpp"

using namespace gs2;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long x : c) p.emplace_back(x);
    return p;
}

const ZPoly B1 = zp({1, 3, 4});
const ZPoly B2 = zp({1, -1, 4});

CountTable table_for(const ZPoly& L, int g, int rows, const std::string& id = "X") {
    CountTable t;
    t.curve_id = id;
    LPoly lp{g, L};
    for (int k = 1; k <= rows; ++k) {
        mpz_class n = predicted_count(lp, k);
        std::int64_t total = static_cast<std::int64_t>(n.get_si());
        t.rows.push_back({k, total, 0, total});
    }
    return t;
}

} // namespace

TEST_CASE("reconstruction from counts reproduces the published polynomials") {
    SUBCASE("level 2 from N_1 = 8") {
        CountTable t;
        t.curve_id = "T2";
        t.rows.push_back({1, 4, 4, 8});
        LPoly L = lpoly_from_counts(t, 1);
        CHECK(L.coeffs == B1);
    }
    SUBCASE("level 3 from k = 1..3") {
        ZPoly cube = pow_poly(B1, 3);
        CountTable t = table_for(cube, 3, 3, "T3");
        CHECK(lpoly_from_counts(t, 3).coeffs == cube);
    }
    SUBCASE("level-4 quotient from k = 1..4") {
        ZPoly q = mul_poly(pow_poly(B1, 3), B2);
        CountTable t = table_for(q, 4, 4, "Q4u0");
        CHECK(lpoly_from_counts(t, 4).coeffs == q);
    }
    SUBCASE("round-trip with excess rows on published polynomials") {
        for (const ZPoly& L : {B1, pow_poly(B1, 3),
                               mul_poly(pow_poly(B2, 2), pow_poly(B1, 7))}) {
            int g = degree(L) / 2;
            CountTable t = table_for(L, g, g + 3);
            CHECK(lpoly_from_counts(t, g).coeffs == L);
        }
    }
}

TEST_CASE("verify_excess") {
    LPoly L2{1, B1};
    SUBCASE("predicted N_2 = 16") {
        CHECK(predicted_count(L2, 2) == 16); // S_2 = (-3)^2 - 2*4 = 1
    }
    SUBCASE("own generated table verifies") {
        CountTable t = table_for(B1, 1, 5);
        CHECK(verify_excess(L2, t));
    }
    SUBCASE("perturbed row fails") {
        CountTable t = table_for(B1, 1, 2);
        t.rows[0].total = 9;
        t.rows[0].affine = 5;
        CHECK(!verify_excess(L2, t));
    }
}

TEST_CASE("inconsistent counts are rejected") {
    SUBCASE("wrong genus") {
        ZPoly cube = pow_poly(B1, 3);
        CountTable t = table_for(cube, 3, 3, "T3");
        CHECK_THROWS_AS(lpoly_from_counts(t, 2), CountInconsistency);
    }
    SUBCASE("missing row") {
        CountTable t = table_for(B1, 1, 1);
        CHECK_THROWS_AS(lpoly_from_counts(t, 2), CountInconsistency);
    }
    SUBCASE("Weil bound violation") {
        CountTable t;
        t.curve_id = "T2";
        t.rows.push_back({1, 40, 0, 40});
        CHECK_THROWS_AS(lpoly_from_counts(t, 1), CountInconsistency);
    }
    SUBCASE("corrupt excess row") {
        CountTable t = table_for(B1, 1, 3);
        t.rows[2].total += 2;
        t.rows[2].affine += 2;
        CHECK_THROWS_AS(lpoly_from_counts(t, 1), CountInconsistency);
    }
}

TEST_CASE("p-rank and ordinarity") {
    LPoly L3{3, pow_poly(B1, 3)};
    CHECK(prank(L3) == 3);
    CHECK(is_ordinary(L3));
    ZPoly t5 = mul_poly(mul_poly(pow_poly(B2, 4), pow_poly(B1, 11)),
                        mul_poly(pow_poly(zp({1, 1, 4}), 2),
                                 pow_poly(zp({1, 2, 1, 8, 16}), 2)));
    LPoly L5{21, t5};
    CHECK(prank(L5) == 21);
    CHECK(is_ordinary(L5));
    LPoly one{0, zp({1})};
    CHECK(prank(one) == 0);
    CHECK(is_ordinary(one)); // vacuously
    LPoly ss{1, zp({1, 0, 4})};
    CHECK(prank(ss) == 0);
    CHECK(!is_ordinary(ss));
}
