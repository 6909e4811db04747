#include <cstdlib>
#include <string>

#include "oamrcs/error.hpp"
#include "oamrcs/simd/kernels.hpp"

namespace oamrcs::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
        case Isa::Neon: return "neon";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return detail::avx2_table() != nullptr && __builtin_cpu_supports("avx2") &&
                   __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
            // Advanced SIMD is mandatory on AArch64.
            return detail::neon_table() != nullptr;
    }
    return false;
}

const KernelTable& kernels_for(Isa isa) {
    if (!isa_supported(isa)) {
        throw Error("kernel set '" + std::string(isa_name(isa)) + "' is not available on this machine");
    }
    switch (isa) {
        case Isa::Avx2: return *detail::avx2_table();
        case Isa::Neon: return *detail::neon_table();
        case Isa::Scalar: break;
    }
    return detail::scalar_table();
}

namespace {

const KernelTable& select() {
    if (const char* forced = std::getenv("OAMRCS_ISA")) {
        const std::string name(forced);
        for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Neon}) {
            if (name == isa_name(isa)) {
                return kernels_for(isa);
            }
        }
        throw Error("OAMRCS_ISA must be one of scalar, avx2, neon (got '" + name + "')");
    }
    for (Isa isa : {Isa::Avx2, Isa::Neon}) {
        if (isa_supported(isa)) {
            return kernels_for(isa);
        }
    }
    return detail::scalar_table();
}

}  // namespace

const KernelTable& kernels() {
    static const KernelTable& table = select();
    return table;
}

}  // namespace oamrcs::simd
