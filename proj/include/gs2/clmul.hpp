#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace gs2 {

struct U128 {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Carry-less 64x64 -> 128 bit multiplication kernel. The scalar kernel is the
// reference; hardware kernels (PCLMULQDQ on x86-64, PMULL on aarch64) must be
// bit-identical and are selected at runtime.
struct ClmulKernel {
    const char* name;
    U128 (*mul64)(std::uint64_t a, std::uint64_t b);
};

U128 clmul_scalar(std::uint64_t a, std::uint64_t b);

// Kernels usable on this machine, reference first.
const std::vector<ClmulKernel>& available_kernels();

// Active kernel. Defaults to the fastest available; GS2ZETA_KERNEL=<name>
// forces one. set_active_kernel returns false for unknown/unavailable names.
const ClmulKernel& active_kernel();
bool set_active_kernel(std::string_view name);

} // namespace gs2
