#include "gs2/clmul.hpp"

#include <cstdlib>
#include <string>

namespace gs2 {

U128 clmul_scalar(std::uint64_t a, std::uint64_t b) {
    // Branch-free shift-and-xor over the bits of b, 4 bits per round.
    U128 r;
    std::uint64_t alo = a;
    std::uint64_t ahi = 0;
    for (int i = 0; i < 64; ++i) {
        std::uint64_t mask = ~((b >> i & 1) - 1);
        r.lo ^= alo & mask;
        r.hi ^= ahi & mask;
        ahi = (ahi << 1) | (alo >> 63);
        alo <<= 1;
    }
    return r;
}

#if defined(__x86_64__) || defined(_M_X64)
U128 clmul_pclmul(std::uint64_t a, std::uint64_t b); // clmul_x86.cpp
bool pclmul_supported();
#endif
#if defined(__aarch64__)
U128 clmul_pmull(std::uint64_t a, std::uint64_t b); // clmul_neon.cpp
bool pmull_supported();
#endif

const std::vector<ClmulKernel>& available_kernels() {
    static const std::vector<ClmulKernel> kernels = [] {
        std::vector<ClmulKernel> v;
        v.push_back({"scalar", &clmul_scalar});
#if defined(__x86_64__) || defined(_M_X64)
        if (pclmul_supported()) v.push_back({"pclmul", &clmul_pclmul});
#endif
#if defined(__aarch64__)
        if (pmull_supported()) v.push_back({"pmull", &clmul_pmull});
#endif
        return v;
    }();
    return kernels;
}

namespace {

const ClmulKernel* pick_default() {
    const auto& ks = available_kernels();
    if (const char* env = std::getenv("GS2ZETA_KERNEL")) {
        for (const auto& k : ks)
            if (std::string(env) == k.name) return &k;
    }
    return &ks.back(); // fastest available last
}

const ClmulKernel*& active_slot() {
    static const ClmulKernel* active = pick_default();
    return active;
}

} // namespace

const ClmulKernel& active_kernel() { return *active_slot(); }

bool set_active_kernel(std::string_view name) {
    for (const auto& k : available_kernels()) {
        if (name == k.name) {
            active_slot() = &k;
            return true;
        }
    }
    return false;
}

} // namespace gs2
