#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gs2/zpoly.hpp"

namespace gs2 {

// Published reference values for this tower, kept verbatim (including the
// two internally inconsistent level-6 entries) so computed results can be
// diffed against them. Factors are stored as (polynomial, exponent) lists.
struct RefFactorization {
    std::string curve_id;
    std::vector<std::pair<ZPoly, int>> factors;
    ZPoly expanded() const;
};

// Factored L-polynomials as printed for T1..T6, the level-3/4/5 quotients,
// and the two level-6 helper curves.
const std::vector<RefFactorization>& published_lpolys();

std::optional<RefFactorization> published_lpoly(const std::string& curve_id);

// The small factors printed across levels 2..5; the seed dictionary for
// factored reports.
const std::vector<ZPoly>& published_small_factors();

// Published smoothness claim for the Picard order at level n:
// 2^(58n-243) * 3^(2n-8) * 5^(2n-10), the fixed part of the printed product.
mpz_class published_pic_fixed_part(int n);

} // namespace gs2
