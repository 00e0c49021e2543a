#pragma once

#include "gs2/count.hpp"
#include "gs2/zpoly.hpp"

namespace gs2 {

// Reconstruct the L-polynomial from counted places: S_k = 4^k + 1 - N_k fed
// through the Newton recurrence, completed by the functional equation. The
// genus is always supplied from the structure formulas, never inferred.
// Every row of the table beyond k = g re-verifies the result; any mismatch,
// non-integral coefficient or Weil-bound violation throws CountInconsistency.
LPoly lpoly_from_counts(const CountTable& table, int g);

// True iff every row k satisfies N_k = 4^k + 1 - S_k(L).
bool verify_excess(const LPoly& L, const CountTable& table);

// N_k predicted by an L-polynomial.
mpz_class predicted_count(const LPoly& L, int k);

// p-rank = deg(L mod 2); ordinary <=> p-rank = g.
int prank(const LPoly& L);
bool is_ordinary(const LPoly& L);

} // namespace gs2
