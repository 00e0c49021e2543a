#pragma once

#include <vector>

#include "gs2/gf2m.hpp"

namespace gs2 {

// Truncated Laurent series over F_{4^k} with an explicit knowledge window:
// the coefficient of t^(v+i) is c[i]; exponents below v are known to be zero;
// exponents at or above v + c.size() are unknown. Arithmetic propagates the
// window conservatively. The exact zero series has v = kExactZero.
class LaurentSeries {
public:
    static constexpr int kExactZero = 1 << 28;

    LaurentSeries() : v_(kExactZero) {}
    LaurentSeries(Field F, int v, std::vector<FieldElement> c)
        : F_(std::move(F)), v_(v), c_(std::move(c)) {
        normalize();
    }

    static LaurentSeries zero() { return LaurentSeries(); }
    // c * t^e, exact, window padded to prec terms.
    static LaurentSeries monomial(Field F, FieldElement c, int e, int prec);
    static LaurentSeries constant(Field F, FieldElement c, int prec) {
        return monomial(std::move(F), c, 0, prec);
    }

    bool exact_zero() const { return c_.empty() && v_ >= kExactZero; }
    int valuation_floor() const { return v_; } // first possibly-nonzero exponent
    int prec_end() const {
        return c_.empty() && v_ >= kExactZero ? kExactZero
                                              : v_ + static_cast<int>(c_.size());
    }
    bool known_at(int e) const { return e < prec_end(); }
    int known_terms() const { return static_cast<int>(c_.size()); }
    const Field& field() const { return F_; }

    FieldElement coeff(int e) const {
        if (e < v_) return 0;
        std::size_t i = static_cast<std::size_t>(e - v_);
        return i < c_.size() ? c_[i] : 0;
    }

    // Leading exponent and coefficient; throws InsufficientPrecision when the
    // window is empty (all known coefficients zero).
    std::pair<int, FieldElement> lead() const;

    LaurentSeries add(const LaurentSeries& o) const;
    LaurentSeries mul(const LaurentSeries& o) const;
    LaurentSeries square() const;
    LaurentSeries invert() const; // throws InsufficientPrecision on empty window
    LaurentSeries scale(FieldElement k) const;
    LaurentSeries truncate(int nterms) const;
    LaurentSeries pow_int(int e) const; // e may be negative

    // g(t) -> g(T(s)); T must have valuation >= 1.
    LaurentSeries substitute(const LaurentSeries& T) const;

private:
    void normalize() {
        std::size_t i = 0;
        while (i < c_.size() && c_[i] == 0) ++i;
        if (i) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(i));
            v_ += static_cast<int>(i);
        }
    }

    Field F_;
    int v_;
    std::vector<FieldElement> c_;
};

} // namespace gs2
