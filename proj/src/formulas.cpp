#include "gs2/formulas.hpp"

#include "gs2/errors.hpp"

namespace gs2 {

std::int64_t genus_formula(int n) {
    if (n < 1 || n > 40) throw DomainError("genus_formula: n in [1,40]");
    if (n % 2 == 0) {
        std::int64_t h = (1ll << (n / 2)) - 1;
        return h * h;
    }
    return ((1ll << ((n + 1) / 2)) - 1) * ((1ll << ((n - 1) / 2)) - 1);
}

std::int64_t dim_y(int n) {
    if (n < 2 || n > 60) throw DomainError("dim_y: n in [2,60]");
    if (n % 2 == 0) return 1ll << (n - 1);
    return (1ll << (n - 1)) - (1ll << ((n - 3) / 2));
}

std::int64_t deg_ly(int n) { return 2 * dim_y(n); }

DimChain dim_chain(int n) {
    if (n < 2) throw DomainError("dim_chain: n >= 2");
    auto g = [](int i) { return i >= 1 ? genus_formula(i) : 0; };
    auto dimX = [&](int i) { return (g(i + 2) + 2 * g(i) - g(i + 1)) / 2; };
    DimChain d;
    d.dimX = dimX(n);
    d.dimX1 = d.dimX + 2 * g(n - 1) - dimX(n - 1) - g(n);
    d.dimY = d.dimX1 - g(n - 1);
    return d;
}

namespace {

mpq_class powval_q(int p, int e) {
    mpq_class r = 1;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r *= p;
    return e >= 0 ? r : 1 / r;
}

} // namespace

mpz_class ds_prank(int n, const mpz_class& d, int p) {
    if (n < 3) throw DomainError("ds_prank: n >= 3");
    mpz_class pn1 = 1, pn3 = 1;
    for (int i = 0; i < n - 1; ++i) pn1 *= p;
    for (int i = 0; i < n - 3; ++i) pn3 *= p;
    if (d % pn1 != 0)
        throw DomainError("ds_prank: d must be divisible by p^{n-1}");
    // ramification side
    mpz_class rhs = -d + (d / pn3) * (pn3 - 1) + p * (d / pn1) * (pn1 - 1);
    // closed form: d (p - p^{3-n} - p^{2-n}) + 1
    mpq_class closed = mpq_class(d) * (mpq_class(p) - powval_q(p, 3 - n) - powval_q(p, 2 - n));
    mpq_class diff = closed - mpq_class(rhs);
    if (diff != 0) throw InternalError("ds_prank: identity failed numerically");
    return rhs + 1;
}

bool ds_prank_identity(int n, int p) {
    if (n < 3) return false;
    // Coefficient of d on the ramification side:
    //   -1 + (p^{n-3}-1)/p^{n-3} + p (p^{n-1}-1)/p^{n-1}
    mpq_class pn1 = powval_q(p, n - 1), pn3 = powval_q(p, n - 3);
    mpq_class lhs = mpq_class(-1) + (pn3 - 1) / pn3 + p * (pn1 - 1) / pn1;
    mpq_class rhs = mpq_class(p) - powval_q(p, 3 - n) - powval_q(p, 2 - n);
    lhs.canonicalize();
    rhs.canonicalize();
    return lhs == rhs;
}

} // namespace gs2
