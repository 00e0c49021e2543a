#include "gs2/clmul.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace gs2 {

bool pclmul_supported() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("pclmul");
#else
    return false;
#endif
}

__attribute__((target("pclmul,sse4.1")))
U128 clmul_pclmul(std::uint64_t a, std::uint64_t b) {
    __m128i va = _mm_set_epi64x(0, static_cast<long long>(a));
    __m128i vb = _mm_set_epi64x(0, static_cast<long long>(b));
    __m128i p = _mm_clmulepi64_si128(va, vb, 0x00);
    U128 r;
    r.lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
    r.hi = static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    return r;
}

} // namespace gs2

#endif
