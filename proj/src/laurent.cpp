#include "gs2/laurent.hpp"

#include <algorithm>

#include "gs2/errors.hpp"

namespace gs2 {

LaurentSeries LaurentSeries::monomial(Field F, FieldElement c, int e, int prec) {
    if (c == 0) return zero();
    std::vector<FieldElement> v(static_cast<std::size_t>(std::max(prec, 1)), 0);
    v[0] = c;
    return LaurentSeries(std::move(F), e, std::move(v));
}

std::pair<int, FieldElement> LaurentSeries::lead() const {
    if (c_.empty()) throw InsufficientPrecision("series window empty");
    return {v_, c_[0]};
}

LaurentSeries LaurentSeries::add(const LaurentSeries& o) const {
    if (exact_zero()) return o;
    if (o.exact_zero()) return *this;
    int end = std::min(prec_end(), o.prec_end());
    int v = std::min(v_, o.v_);
    if (end <= v) return LaurentSeries(F_ ? F_ : o.F_, std::min(v, end), {});
    std::vector<FieldElement> out(static_cast<std::size_t>(end - v));
    for (int e = v; e < end; ++e)
        out[static_cast<std::size_t>(e - v)] = coeff(e) ^ o.coeff(e);
    return LaurentSeries(F_ ? F_ : o.F_, v, std::move(out));
}

LaurentSeries LaurentSeries::mul(const LaurentSeries& o) const {
    if (exact_zero() || o.exact_zero()) return zero();
    if (c_.empty() || o.c_.empty())
        return LaurentSeries(F_ ? F_ : o.F_, v_ + o.v_, {});
    const FieldSpec& F = *F_;
    std::size_t n = std::min(c_.size(), o.c_.size());
    std::vector<FieldElement> out(n, 0);
    for (std::size_t i = 0; i < std::min(c_.size(), n); ++i) {
        if (c_[i] == 0) continue;
        std::size_t jmax = std::min(o.c_.size(), n - i);
        for (std::size_t j = 0; j < jmax; ++j)
            if (o.c_[j]) out[i + j] ^= F.mul(c_[i], o.c_[j]);
    }
    return LaurentSeries(F_, v_ + o.v_, std::move(out));
}

LaurentSeries LaurentSeries::square() const {
    if (exact_zero()) return zero();
    if (c_.empty()) return LaurentSeries(F_, 2 * v_, {});
    const FieldSpec& F = *F_;
    std::vector<FieldElement> out(2 * c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i]) out[2 * i] = F.square(c_[i]);
    return LaurentSeries(F_, 2 * v_, std::move(out));
}

LaurentSeries LaurentSeries::invert() const {
    if (c_.empty()) throw InsufficientPrecision("invert: series window empty");
    const FieldSpec& F = *F_;
    std::size_t n = c_.size();
    std::vector<FieldElement> b(n, 0);
    b[0] = F.invert(c_[0]);
    for (std::size_t i = 1; i < n; ++i) {
        FieldElement s = 0;
        for (std::size_t j = 1; j <= i; ++j)
            if (j < c_.size() && c_[j]) s ^= F.mul(c_[j], b[i - j]);
        b[i] = F.mul(b[0], s);
    }
    return LaurentSeries(F_, -v_, std::move(b));
}

LaurentSeries LaurentSeries::scale(FieldElement k) const {
    if (k == 0 || exact_zero()) return zero();
    const FieldSpec& F = *F_;
    std::vector<FieldElement> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out[i] = c_[i] ? F.mul(c_[i], k) : 0;
    return LaurentSeries(F_, v_, std::move(out));
}

LaurentSeries LaurentSeries::truncate(int nterms) const {
    if (exact_zero()) return *this;
    if (nterms <= 0) return LaurentSeries(F_, v_, {});
    if (static_cast<std::size_t>(nterms) >= c_.size()) return *this;
    return LaurentSeries(F_, v_,
                         std::vector<FieldElement>(c_.begin(), c_.begin() + nterms));
}

LaurentSeries LaurentSeries::pow_int(int e) const {
    if (e == 0) {
        int prec = exact_zero() ? 64 : static_cast<int>(c_.size()) + 4;
        return constant(F_, 1, prec);
    }
    LaurentSeries base = e > 0 ? *this : invert();
    LaurentSeries r = base;
    for (int i = 1; i < (e > 0 ? e : -e); ++i) r = r.mul(base);
    return r;
}

LaurentSeries LaurentSeries::substitute(const LaurentSeries& T) const {
    if (exact_zero()) return zero();
    if (c_.empty()) return LaurentSeries(T.F_, v_ * std::max(T.v_, 1), {});
    // Horner over the window, then shift by T^v for the pole part.
    int cprec = std::max(static_cast<int>(c_.size()), T.known_terms()) + 4;
    LaurentSeries acc = zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc.mul(T);
        if (c_[i]) acc = acc.add(constant(F_, c_[i], cprec));
    }
    return acc.mul(T.pow_int(v_));
}

} // namespace gs2
