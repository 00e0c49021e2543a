#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gs2/zpoly.hpp"
#include "gs2/errors.hpp"

using namespace gs2;

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long x : c) p.emplace_back(x);
    return p;
}

const ZPoly B1 = zp({1, 3, 4}); // 1+3T+4T^2
const ZPoly B2 = zp({1, -1, 4});
const ZPoly B3 = zp({1, 1, 4});
const ZPoly QUARTIC = zp({1, 2, 1, 8, 16});

ZPoly random_poly(std::mt19937_64& rng, int maxdeg) {
    int d = static_cast<int>(rng() % (maxdeg + 1));
    ZPoly p(d + 1);
    for (auto& c : p) c = static_cast<long>(rng() % 41) - 20;
    if (p[d] == 0) p[d] = 1;
    return p;
}

} // namespace

TEST_CASE("mul_poly basics") {
    CHECK(mul_poly(B1, B1) == zp({1, 6, 17, 24, 16}));
    ZPoly a = zp({7, -2, 0, 5});
    CHECK(mul_poly(a, zp({1})) == a);
    // (1+3T+4T^2)^3 is the level-3 L-polynomial
    CHECK(pow_poly(B1, 3) == zp({1, 9, 39, 99, 156, 144, 64}));
}

TEST_CASE("exact_div") {
    CHECK(exact_div(pow_poly(B1, 3), B1) == mul_poly(B1, B1));
    // level-4 / level-3 quotient
    ZPoly t4 = mul_poly(pow_poly(B2, 2), pow_poly(B1, 7));
    ZPoly t3 = pow_poly(B1, 3);
    CHECK(exact_div(t4, t3) == mul_poly(pow_poly(B2, 2), pow_poly(B1, 4)));
    CHECK_THROWS_AS(exact_div(zp({1, 1}), zp({1, 2})), NonExactDivision);
    CHECK_THROWS_AS(exact_div(zp({1}), ZPoly{}), DomainError);
}

TEST_CASE("exact_div round-trips random products") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        ZPoly a = random_poly(rng, 9), b = random_poly(rng, 9);
        CHECK(poly_equal(exact_div(mul_poly(a, b), b), trim(a)));
    }
}

TEST_CASE("from_power_sums") {
    SUBCASE("genus 1 from N_1 = 8") {
        LPoly L = from_power_sums({mpz_class(-3)}, 1);
        CHECK(L.coeffs == zp({1, 3, 4}));
    }
    SUBCASE("genus 0 gives the constant 1") {
        LPoly L = from_power_sums({}, 0);
        CHECK(L.coeffs == zp({1}));
    }
    SUBCASE("genus 3 cube via forward-extracted sums") {
        ZPoly cube = pow_poly(B1, 3);
        PowerSums S = power_sums_of(cube, 3);
        CHECK(S == PowerSums{mpz_class(-9), mpz_class(3), mpz_class(27)});
        LPoly L = from_power_sums(S, 3);
        CHECK(L.coeffs == cube);
    }
    SUBCASE("non-integral coefficient detected") {
        CHECK_THROWS_AS(from_power_sums({mpz_class(1), mpz_class(2)}, 2),
                        NonIntegralCoefficient);
    }
    SUBCASE("too few sums") {
        CHECK_THROWS_AS(from_power_sums({mpz_class(1)}, 2), DomainError);
    }
}

TEST_CASE("round-trip on the published L-polynomials") {
    std::vector<ZPoly> lpolys = {
        B1,
        pow_poly(B1, 3),
        mul_poly(pow_poly(B2, 2), pow_poly(B1, 7)),
        mul_poly(mul_poly(pow_poly(B2, 4), pow_poly(B1, 11)),
                 mul_poly(pow_poly(B3, 2), pow_poly(QUARTIC, 2))),
        mul_poly(pow_poly(B1, 3), B2),
        mul_poly(mul_poly(B2, B3), mul_poly(pow_poly(B1, 5), QUARTIC)),
    };
    for (const auto& p : lpolys) {
        int g = degree(p) / 2;
        PowerSums S = power_sums_of(p, g);
        LPoly L = from_power_sums(S, g);
        CHECK(L.coeffs == p);
        CHECK(functional_equation_holds(L));
        CHECK(complete(L).coeffs == L.coeffs); // completion idempotent
        mpz_class qg = 1;
        for (int i = 0; i < g; ++i) qg *= 4;
        CHECK(L.coeffs[2 * g] == qg); // a_{2g} = q^g
    }
}

TEST_CASE("eval_at") {
    CHECK(eval_at(B1, 1) == 8);
    ZPoly t4 = mul_poly(pow_poly(B2, 2), pow_poly(B1, 7));
    CHECK(eval_at(t4, 1) == 33554432); // 2^25
    ZPoly p = zp({5, -3, 7});
    CHECK(eval_at(p, 0) == 5);
}

TEST_CASE("mod2_degree") {
    CHECK(mod2_degree(B1) == 1); // 1 + T
    ZPoly t4 = mul_poly(pow_poly(B2, 2), pow_poly(B1, 7));
    CHECK(mod2_degree(t4) == 9); // (1+T)^9
    CHECK(mod2_degree(zp({1})) == 0);
    CHECK(mod2_degree(ZPoly{}) == -1);
    CHECK(mod2_degree(zp({2, 4, 8})) == -1);
}

TEST_CASE("exact_sqrt") {
    ZPoly sq = mul_poly(pow_poly(B3, 2), pow_poly(QUARTIC, 2));
    CHECK(exact_sqrt(sq) == mul_poly(B3, QUARTIC));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        ZPoly b = random_poly(rng, 7);
        b[0] = 1;
        CHECK(exact_sqrt(mul_poly(b, b)) == trim(b));
    }
    CHECK_THROWS_AS(exact_sqrt(zp({1, 1})), NonExactDivision);
    CHECK_THROWS_AS(exact_sqrt(zp({1, 2, 2})), NonExactDivision);
}

TEST_CASE("poly_to_string") {
    CHECK(poly_to_string(B1) == "1+3T+4T^2");
    CHECK(poly_to_string(B2) == "1-T+4T^2");
    CHECK(poly_to_string(zp({1})) == "1");
    CHECK(poly_to_string(ZPoly{}) == "0");
    CHECK(poly_to_string(QUARTIC) == "1+2T+T^2+8T^3+16T^4");
}
