#include "gs2/zeta.hpp"

#include <sstream>

#include "gs2/errors.hpp"

namespace gs2 {

namespace {

mpz_class pow4(int k) {
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) r *= 4;
    return r;
}

} // namespace

mpz_class predicted_count(const LPoly& L, int k) {
    PowerSums S = power_sums_of(L.coeffs, k);
    return pow4(k) + 1 - S[static_cast<std::size_t>(k - 1)];
}

LPoly lpoly_from_counts(const CountTable& table, int g) {
    PowerSums S;
    for (int k = 1; k <= g; ++k) {
        const CountRow* row = table.find(k);
        if (!row)
            throw CountInconsistency("lpoly_from_counts: missing row k=" +
                                     std::to_string(k) + " for " + table.curve_id);
        mpz_class s = pow4(k) + 1 - row->total;
        // Weil bound: |S_k| <= 2 g 2^k
        mpz_class bound = mpz_class(2 * g) * (mpz_class(1) << k);
        if (abs(s) > bound)
            throw CountInconsistency("lpoly_from_counts: Weil bound violated at k=" +
                                     std::to_string(k) + " for " + table.curve_id);
        S.push_back(std::move(s));
    }
    LPoly L;
    try {
        L = from_power_sums(S, g);
    } catch (const NonIntegralCoefficient& e) {
        throw CountInconsistency(std::string("lpoly_from_counts: ") + e.what() +
                                 " (wrong counts or wrong genus for " +
                                 table.curve_id + ")");
    }
    if (!verify_excess(L, table))
        throw CountInconsistency("lpoly_from_counts: excess rows contradict the "
                                 "reconstruction for " + table.curve_id);
    return L;
}

bool verify_excess(const LPoly& L, const CountTable& table) {
    if (table.rows.empty()) return true;
    int kmax = 0;
    for (const auto& r : table.rows) kmax = std::max(kmax, r.k);
    PowerSums S = power_sums_of(L.coeffs, kmax);
    for (const auto& r : table.rows) {
        mpz_class want = pow4(r.k) + 1 - S[static_cast<std::size_t>(r.k - 1)];
        if (want != r.total) return false;
        if (r.total != r.affine + r.bad) return false;
    }
    return true;
}

int prank(const LPoly& L) { return mod2_degree(L.coeffs); }

bool is_ordinary(const LPoly& L) { return mod2_degree(L.coeffs) == L.g; }

} // namespace gs2
