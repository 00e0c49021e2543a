#include "gs2/zpoly.hpp"

#include <sstream>

#include "gs2/errors.hpp"

namespace gs2 {

ZPoly trim(ZPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

ZPoly mul_poly(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    return trim(std::move(r));
}

ZPoly add_poly(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

bool poly_equal(const ZPoly& a, const ZPoly& b) {
    ZPoly x = trim(a), y = trim(b);
    return x == y;
}

ZPoly exact_div(const ZPoly& n_in, const ZPoly& d_in) {
    ZPoly n = trim(n_in), d = trim(d_in);
    if (d.empty()) throw DomainError("exact_div: zero divisor");
    if (n.empty()) return {};
    int dn = static_cast<int>(n.size()) - 1;
    int dd = static_cast<int>(d.size()) - 1;
    if (dn < dd) throw NonExactDivision("degree(n) < degree(d)");
    ZPoly q(dn - dd + 1, mpz_class(0));
    ZPoly rem = n;
    const mpz_class& lead = d[dd];
    for (int i = dn - dd; i >= 0; --i) {
        mpz_class c = rem[i + dd];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t()))
            throw NonExactDivision("leading coefficient does not divide");
        mpz_class f = c / lead;
        q[i] = f;
        for (int j = 0; j <= dd; ++j) rem[i + j] -= f * d[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw NonExactDivision("nonzero remainder");
    return trim(std::move(q));
}

ZPoly exact_sqrt(const ZPoly& p_in) {
    ZPoly p = trim(p_in);
    if (p.empty()) return {};
    int dp = static_cast<int>(p.size()) - 1;
    if (dp % 2 != 0 || p[0] != 1)
        throw NonExactDivision("exact_sqrt: not a unit-constant perfect square");
    int db = dp / 2;
    ZPoly b(db + 1, mpz_class(0));
    b[0] = 1;
    // p_k = sum b_i b_{k-i}: solve for b_k from 2 b_0 b_k = p_k - interior.
    for (int k = 1; k <= db; ++k) {
        mpz_class s = p[k];
        for (int i = 1; i < k; ++i)
            if (k - i <= db) s -= b[i] * b[k - i];
        if (!mpz_divisible_ui_p(s.get_mpz_t(), 2))
            throw NonExactDivision("exact_sqrt: odd interior coefficient");
        b[k] = s / 2;
    }
    if (!poly_equal(mul_poly(b, b), p))
        throw NonExactDivision("exact_sqrt: verification failed");
    return b;
}

ZPoly pow_poly(const ZPoly& a, int e) {
    ZPoly r{mpz_class(1)};
    for (int i = 0; i < e; ++i) r = mul_poly(r, a);
    return r;
}

mpz_class eval_at(const ZPoly& p, const mpz_class& t) {
    mpz_class r = 0;
    for (std::size_t i = p.size(); i-- > 0;) r = r * t + p[i];
    return r;
}

int mod2_degree(const ZPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (mpz_odd_p(p[i].get_mpz_t())) return i;
    return -1;
}

LPoly from_power_sums(const PowerSums& s, int g, int q) {
    if (static_cast<int>(s.size()) < g)
        throw DomainError("from_power_sums: need at least g power sums");
    LPoly L;
    L.g = g;
    L.coeffs.assign(2 * g + 1, mpz_class(0));
    L.coeffs[0] = 1;
    for (int i = 1; i <= g; ++i) {
        mpz_class acc = 0;
        for (int j = 1; j <= i; ++j) acc += s[j - 1] * L.coeffs[i - j];
        acc = -acc;
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(i)))
            throw NonIntegralCoefficient("Newton recurrence: i does not divide at i=" +
                                         std::to_string(i));
        L.coeffs[i] = acc / i;
    }
    mpz_class qp = 1; // q^{g-i} for descending i
    for (int i = g - 1; i >= 0; --i) {
        qp *= q;
        L.coeffs[2 * g - i] = qp * L.coeffs[i];
    }
    return L;
}

PowerSums power_sums_of(const ZPoly& p, int r) {
    int d = degree(p);
    if (d < 0 || p[0] != 1) throw DomainError("power_sums_of: need unit constant term");
    PowerSums S(r);
    for (int i = 1; i <= r; ++i) {
        mpz_class acc = 0;
        if (i <= d) acc = mpz_class(i) * p[i];
        for (int j = 1; j < i; ++j)
            if (j <= d) acc += p[j] * S[i - j - 1];
        S[i - 1] = -acc;
    }
    return S;
}

bool functional_equation_holds(const LPoly& L) {
    if (static_cast<int>(L.coeffs.size()) != 2 * L.g + 1) return false;
    if (L.coeffs[0] != 1) return false;
    if (L.g > 0 && L.coeffs[2 * L.g] == 0) return false;
    mpz_class qp = 1;
    for (int i = L.g; i >= 0; --i) {
        if (L.coeffs[2 * L.g - i] != qp * L.coeffs[i]) return false;
        qp *= LPoly::q;
    }
    return true;
}

LPoly complete(const LPoly& L) {
    LPoly out = L;
    out.coeffs.resize(2 * L.g + 1, mpz_class(0));
    mpz_class qp = 1;
    for (int i = L.g - 1; i >= 0; --i) {
        qp *= LPoly::q;
        out.coeffs[2 * L.g - i] = qp * out.coeffs[i];
    }
    return out;
}

std::string poly_to_string(const ZPoly& p) {
    int d = degree(p);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d; ++i) {
        if (p[i] == 0) continue;
        mpz_class a = p[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) {
            os << "T";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace gs2
