#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gs2 {

using ZPoly = std::vector<mpz_class>; // dense, coeffs[i] multiplies T^i

// Completed L-polynomial: degree 2g, a_0 = 1, functional equation
// a_{2g-i} = q^{g-i} a_i with q = 4.
struct LPoly {
    int g = 0;
    ZPoly coeffs; // size 2g + 1
    static constexpr int q = 4;
};

// S_j = q^j + 1 - N_j, j = 1..r (power sums of the inverse roots).
using PowerSums = std::vector<mpz_class>;

ZPoly trim(ZPoly p);
int degree(const ZPoly& p); // -1 for the zero polynomial

ZPoly mul_poly(const ZPoly& a, const ZPoly& b);
ZPoly add_poly(const ZPoly& a, const ZPoly& b);
bool poly_equal(const ZPoly& a, const ZPoly& b);

// Exact quotient n / d; throws NonExactDivision unless d * q == n exactly.
ZPoly exact_div(const ZPoly& n, const ZPoly& d);

// Exact square root of a perfect-square polynomial with p(0) = 1.
ZPoly exact_sqrt(const ZPoly& p);

ZPoly pow_poly(const ZPoly& a, int e);

mpz_class eval_at(const ZPoly& p, const mpz_class& t);

// Degree after reducing coefficients mod 2; -1 for the zero polynomial.
int mod2_degree(const ZPoly& p);

// Newton reconstruction: a_0 = 1, i*a_i = -sum_{j=1..i} S_j a_{i-j} for
// i = 1..g, then the functional equation fills a_{g+1}..a_{2g}.
// Throws NonIntegralCoefficient when a division by i is not exact.
LPoly from_power_sums(const PowerSums& s, int g, int q = 4);

// Forward direction: S_1..S_r from the coefficients.
PowerSums power_sums_of(const ZPoly& p, int r);

// Coefficient-wise functional equation check.
bool functional_equation_holds(const LPoly& L);

// Re-apply the functional equation; a completed LPoly is a fixed point.
LPoly complete(const LPoly& L);

std::string poly_to_string(const ZPoly& p); // "1+3T+4T^2" style

} // namespace gs2
