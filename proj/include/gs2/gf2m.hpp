#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "gs2/clmul.hpp"

namespace gs2 {

// Elements of F_{2^m} in polynomial basis, bit i = coefficient of x^i,
// fully reduced. m <= 64, so one machine word.
using FieldElement = std::uint64_t;

// F_{2^{2k}} = F_{4^k} with a fixed reduction polynomial and the embedded
// F_4 generator gamma (gamma^2 + gamma + 1 = 0). Immutable after
// construction; all operations are pure.
class FieldSpec {
public:
    // Field F_{4^k}, 1 <= k <= 32. Reduction polynomials come from a fixed
    // built-in table of minimal-weight irreducible polynomials.
    static std::shared_ptr<const FieldSpec> make_field(int k);

    int m() const { return m_; }
    int k() const { return m_ / 2; }
    // Reduction polynomial minus its leading x^m term.
    std::uint64_t reduction_low() const { return red_low_; }
    FieldElement gamma() const { return gamma_; }
    // Number of elements; undefined for m = 64 (wraps to 0), use order_is_word().
    std::uint64_t order() const { return m_ == 64 ? 0 : (1ull << m_); }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        return reduce(clmul_(a, b));
    }

    FieldElement square(FieldElement a) const { return reduce(clmul_(a, a)); }

    // a^{2^{m-1}}; the inverse of squaring.
    FieldElement sqrt(FieldElement a) const;

    // a^{-1}; throws DomainError on a = 0.
    FieldElement invert(FieldElement a) const;

    // Absolute trace to F_2: popcount parity against the precomputed mask.
    int abs_trace(FieldElement a) const {
        return __builtin_parityll(a & trace_mask_);
    }

    // Deterministic solution of y^2 + y = a, or nullopt when abs_trace(a) = 1.
    // The two solutions are {y, y+1}.
    std::optional<FieldElement> solve_as(FieldElement a) const {
        if (abs_trace(a)) return std::nullopt;
        return solve_raw(a);
    }

    // solve_as without the trace gate; caller guarantees abs_trace(a) = 0.
    FieldElement solve_raw(FieldElement a) const {
        FieldElement y = 0;
        std::uint64_t bits = a;
        while (bits) {
            int i = __builtin_ctzll(bits);
            bits &= bits - 1;
            y ^= solver_cols_[i];
        }
        return y;
    }

    FieldElement pow(FieldElement a, std::uint64_t e) const;

    // Batch inversion (Montgomery trick): inverts src into dst; zero inputs
    // get a zero output and their index bit set in the returned pole list.
    // Returns true if any zero was seen.
    bool batch_invert(std::span<const FieldElement> src, std::span<FieldElement> dst,
                      std::vector<std::uint32_t>& poles) const;

    std::uint64_t reduce(U128 c) const {
        // Fold the part above x^m down by the low reduction terms until it is
        // gone. deg(reduction_low) <= m/2 for every table entry, so each fold
        // strictly shrinks the overflow; products of reduced elements stay
        // below degree m + 64 throughout and the top always fits one word.
        if (m_ == 64) {
            while (c.hi) {
                U128 d = clmul_(c.hi, red_low_);
                c.lo ^= d.lo;
                c.hi = d.hi;
            }
            return c.lo;
        }
        std::uint64_t mask = (1ull << m_) - 1;
        for (;;) {
            std::uint64_t top = (c.lo >> m_) | (c.hi << (64 - m_));
            if (top == 0) return c.lo & mask;
            U128 d = clmul_(top, red_low_);
            c.lo = (c.lo & mask) ^ d.lo;
            c.hi = d.hi;
        }
    }

private:
    explicit FieldSpec(int m);

    int m_;
    std::uint64_t red_low_;
    FieldElement gamma_ = 0;
    std::uint64_t trace_mask_ = 0;
    std::array<std::uint64_t, 64> solver_cols_{}; // y = xor of cols over set bits of a
    U128 (*clmul_)(std::uint64_t, std::uint64_t);
};

using Field = std::shared_ptr<const FieldSpec>;

// Reduction polynomial (low part, poly minus x^m) for even m in [2, 64].
std::uint64_t reduction_poly_low(int m);

} // namespace gs2
