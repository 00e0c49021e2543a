#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace gs2 {

// g(T_n): (2^{n/2}-1)^2 for even n, (2^{(n+1)/2}-1)(2^{(n-1)/2}-1) for odd n.
std::int64_t genus_formula(int n);

// dim(Y_{n,1}): 2^{n-1} for even n, 2^{n-1} - 2^{(n-3)/2} for odd n. n >= 3.
std::int64_t dim_y(int n);

// deg(L_{Y_{n,1}}) = 2 * dim_y(n).
std::int64_t deg_ly(int n);

struct DimChain {
    std::int64_t dimX;  // dim Pic0(F_n)
    std::int64_t dimX1; // dim Pic0(F_{n,1})
    std::int64_t dimY;  // dim Y_{n,1}
};

// Recursive dimension bookkeeping from the genus formula:
//   dim(X_n)    = (g_{n+2} + 2 g_n - g_{n+1}) / 2
//   dim(X_{n,1}) = dim(X_n) + 2 g_{n-1} - dim(X_{n-1}) - g_n
//   dim(Y_{n,1}) = dim(X_{n,1}) - g_{n-1}
DimChain dim_chain(int n);

// Deuring-Shafarevich p-rank of the Galois closure of level n over T_1 with
//0 is [closure : T_1] = d. Evaluates the ramification-side expression
//   r_p - 1 = d(-1) + (d/p^{n-3})(p^{n-3}-1) + p (d/p^{n-1})(p^{n-1}-1)
// and checks it against the closed form d(p - p^{3-n} - p^{2-n}) + 1 - 1.
// Requires p^{n-1} | d.
mpz_class ds_prank(int n, const mpz_class& d, int p = 2);

// The same identity with d symbolic: both sides as linear polynomials in d
// over exact rationals.
bool ds_prank_identity(int n, int p = 2);

} // namespace gs2
