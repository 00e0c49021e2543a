#include "gs2/gf2m.hpp"

#include <cassert>

#include "gs2/errors.hpp"

namespace gs2 {

namespace {

// Minimal-weight irreducible polynomials over F_2, even degrees 2..64,
// stored without the leading x^m term. Trinomial x^m + x^a + 1 with the
// smallest a where one exists, else the lexicographically first pentanomial.
// Every entry has deg(low) <= m/2 so reduction closes in two folds.
constexpr std::uint64_t kReductionLow[] = {
    0x3,        // m=2
    0x3,        // m=4
    0x3,        // m=6
    0x1b,       // m=8
    0x9,        // m=10
    0x9,        // m=12
    0x21,       // m=14
    0x2b,       // m=16
    0x9,        // m=18
    0x9,        // m=20
    0x3,        // m=22
    0x1b,       // m=24
    0x1b,       // m=26
    0x3,        // m=28
    0x3,        // m=30
    0x8d,       // m=32
    0x81,       // m=34
    0x201,      // m=36
    0x63,       // m=38
    0x39,       // m=40
    0x81,       // m=42
    0x21,       // m=44
    0x3,        // m=46
    0x2d,       // m=48
    0x1d,       // m=50
    0x9,        // m=52
    0x201,      // m=54
    0x95,       // m=56
    0x80001,    // m=58
    0x3,        // m=60
    0x20000001, // m=62
    0x1b,       // m=64
};

} // namespace

std::uint64_t reduction_poly_low(int m) {
    if (m < 2 || m > 64 || m % 2 != 0)
        throw DomainError("reduction polynomial table covers even m in [2,64]");
    return kReductionLow[m / 2 - 1];
}

FieldSpec::FieldSpec(int m) : m_(m), red_low_(reduction_poly_low(m)) {
    clmul_ = active_kernel().mul64;

    // Trace mask: bit i set iff Tr(x^i) = 1.
    for (int i = 0; i < m_; ++i) {
        FieldElement b = 1ull << i;
        FieldElement t = 0, x = b;
        for (int j = 0; j < m_; ++j) {
            t ^= x;
            x = square(x);
        }
        assert(t == 0 || t == 1);
        if (t) trace_mask_ |= 1ull << i;
    }

    // Linear solver for y -> y^2 + y. Rows of the m x m system over F_2,
    // augmented with an identity to record the elimination; the kernel
    // {0,1} direction is the free column, pinned to zero.
    std::vector<std::uint64_t> row(m_, 0), aug(m_, 0);
    for (int i = 0; i < m_; ++i) {
        FieldElement col = square(1ull << i) ^ (1ull << i); // image of basis vector
        for (int j = 0; j < m_; ++j)
            if (col >> j & 1) row[j] |= 1ull << i;
    }
    for (int j = 0; j < m_; ++j) aug[j] = 1ull << j;
    std::vector<int> pivot_of_col(m_, -1);
    int r = 0;
    for (int c = 0; c < m_ && r < m_; ++c) {
        int sel = -1;
        for (int j = r; j < m_; ++j)
            if (row[j] >> c & 1) { sel = j; break; }
        if (sel < 0) continue;
        std::swap(row[r], row[sel]);
        std::swap(aug[r], aug[sel]);
        for (int j = 0; j < m_; ++j)
            if (j != r && (row[j] >> c & 1)) { row[j] ^= row[r]; aug[j] ^= aug[r]; }
        pivot_of_col[c] = r;
        ++r;
    }
    if (r != m_ - 1) // rank m-1, kernel = {0, 1}
        throw InternalError("gf2m: AS solver rank unexpected (bad reduction polynomial?)");
    // Particular solution y(a): variable c gets bit <aug row of its pivot, a>;
    // the free variable stays 0. Build columns over input bits of a.
    for (int bit = 0; bit < m_; ++bit) {
        FieldElement y = 0;
        for (int c = 0; c < m_; ++c) {
            int pr = pivot_of_col[c];
            if (pr >= 0 && (aug[pr] >> bit & 1)) y |= 1ull << c;
        }
        solver_cols_[bit] = y;
    }

    // gamma: the lexicographically smaller root of t^2 + t + 1 = 0.
    // Solutions of t^2 + t = 1 exist since Tr(1) = 0 for even m.
    FieldElement y = solve_raw(1);
    gamma_ = std::min(y, y ^ 1);
    if (gamma_ == 0 || (square(gamma_) ^ gamma_ ^ 1) != 0)
        throw InternalError("gf2m: gamma construction failed");
}

std::shared_ptr<const FieldSpec> FieldSpec::make_field(int k) {
    if (k < 1 || k > 32) throw DomainError("make_field: k must be in [1,32]");
    return std::shared_ptr<const FieldSpec>(new FieldSpec(2 * k));
}

FieldElement FieldSpec::sqrt(FieldElement a) const {
    for (int i = 0; i < m_ - 1; ++i) a = square(a);
    return a;
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const {
    FieldElement r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = square(base);
        e >>= 1;
    }
    return r;
}

FieldElement FieldSpec::invert(FieldElement a) const {
    if (a == 0) throw DomainError("invert(0)");
    // a^(2^m - 2) = product of a^(2^i) for i = 1..m-1
    FieldElement r = 1, s = a;
    for (int i = 1; i < m_; ++i) {
        s = square(s);
        r = (i == 1) ? s : mul(r, s);
    }
    return r;
}

bool FieldSpec::batch_invert(std::span<const FieldElement> src, std::span<FieldElement> dst,
                             std::vector<std::uint32_t>& poles) const {
    assert(src.size() == dst.size());
    poles.clear();
    std::size_t n = src.size();
    // Prefix products with zeros masked to 1.
    FieldElement acc = 1;
    for (std::size_t i = 0; i < n; ++i) {
        FieldElement v = src[i];
        if (v == 0) {
            poles.push_back(static_cast<std::uint32_t>(i));
            v = 1;
        }
        dst[i] = acc; // prefix product before element i
        acc = mul(acc, v);
    }
    FieldElement inv = invert(acc);
    for (std::size_t i = n; i-- > 0;) {
        FieldElement v = src[i] == 0 ? 1 : src[i];
        FieldElement r = mul(inv, dst[i]);
        inv = mul(inv, v);
        dst[i] = src[i] == 0 ? 0 : r;
    }
    return !poles.empty();
}

} // namespace gs2
