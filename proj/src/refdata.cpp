#include "gs2/refdata.hpp"

#include "gs2/errors.hpp"

namespace gs2 {

namespace {

ZPoly zp(std::initializer_list<long> c) {
    ZPoly p;
    for (long x : c) p.emplace_back(x);
    return p;
}

const ZPoly kB1 = zp({1, 3, 4});
const ZPoly kB2 = zp({1, -1, 4});
const ZPoly kB3 = zp({1, 1, 4});
const ZPoly kQuartic = zp({1, 2, 1, 8, 16});
const ZPoly kQuarticConst4 = zp({4, 2, 1, 8, 16}); // printed with constant 4
const ZPoly kSexticT6 = zp({1, 1, -1, 3, -4, 16, 64});
const ZPoly kSexticF41 = zp({1, 1, 1, 3, 4, 16, 64});

} // namespace

ZPoly RefFactorization::expanded() const {
    ZPoly r{mpz_class(1)};
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r = mul_poly(r, p);
    return r;
}

const std::vector<RefFactorization>& published_lpolys() {
    static const std::vector<RefFactorization> data = {
        {"T1", {}},
        {"T2", {{kB1, 1}}},
        {"T3", {{kB1, 3}}},
        {"T4", {{kB2, 2}, {kB1, 7}}},
        {"T5", {{kB2, 4}, {kB1, 11}, {kB3, 2}, {kQuartic, 2}}},
        // Printed level-6 value; degree 86, inconsistent with the genus
        // formula (2*49 = 98) and with a unit constant term in one factor.
        {"T6", {{kB1, 17}, {kB2, 6}, {kB3, 2}, {kQuarticConst4, 6}, {kSexticT6, 2}}},
        {"Q3u0", {{kB1, 1}}},
        {"Q3u1", {{kB1, 1}}},
        {"Q4u0", {{kB1, 3}, {kB2, 1}}},
        {"Q4u1", {{kB1, 3}, {kB2, 1}}},
        {"Q5u0", {{kB2, 1}, {kB3, 1}, {kB1, 5}, {kQuartic, 1}}},
        {"Q5u1", {{kB2, 1}, {kB3, 1}, {kB1, 5}, {kQuartic, 1}}},
        // Printed helper values used in the level-6 derivation, verbatim.
        {"F41shift", {{kB3, 2}, {kB1, 4}, {kQuarticConst4, 1}, {kSexticF41, 1}}},
        {"Q6helper46",
         {{kB3, 3}, {kB1, 10}, {kQuarticConst4, 2}, {kB2, 3}, {kSexticT6, 1}}},
    };
    return data;
}

std::optional<RefFactorization> published_lpoly(const std::string& curve_id) {
    for (const auto& f : published_lpolys())
        if (f.curve_id == curve_id) return f;
    return std::nullopt;
}

const std::vector<ZPoly>& published_small_factors() {
    static const std::vector<ZPoly> data = {kB1, kB2, kB3, kQuartic};
    return data;
}

mpz_class published_pic_fixed_part(int n) {
    if (58 * n < 243 || n < 5)
        throw DomainError("published_pic_fixed_part: n >= 5");
    auto powz = [](int b, int e) {
        mpz_class r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    return powz(2, 58 * n - 243) * powz(3, 2 * n - 8) * powz(5, std::max(2 * n - 10, 0));
}

} // namespace gs2
