#include "gs2/clmul.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>
#include <sys/auxv.h>

#ifndef HWCAP_PMULL
#define HWCAP_PMULL (1 << 4)
#endif

namespace gs2 {

bool pmull_supported() {
    return (getauxval(AT_HWCAP) & HWCAP_PMULL) != 0;
}

__attribute__((target("+crypto")))
U128 clmul_pmull(std::uint64_t a, std::uint64_t b) {
    poly128_t p = vmull_p64(static_cast<poly64_t>(a), static_cast<poly64_t>(b));
    U128 r;
    r.lo = static_cast<std::uint64_t>(p);
    r.hi = static_cast<std::uint64_t>(p >> 64);
    return r;
}

} // namespace gs2

#endif
