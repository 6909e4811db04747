#pragma once

#include <complex>
#include <span>
#include <string_view>

// Data-parallel inner loops of the RCS engine.
//
// Every kernel has a scalar reference implementation and optional AVX2 and
// NEON variants. kernels() returns the table for the best ISA the running CPU
// supports; the OAMRCS_ISA environment variable (scalar|avx2|neon) overrides
// the choice. The variants agree with the scalar reference to within a few
// ulp; tests/test_simd_equivalence.cpp pins the bounds.

namespace oamrcs::simd {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

struct SumPair {
    double diff_sq;  // Σ (a − b)²
    double ref_sq;   // Σ a²
};

struct KernelTable {
    Isa isa;

    /// out[i] = 2·(1 + cos(phase[i])). Phases must already be reduced to
    /// [−π, π]; this is |e^{ja} + e^{jb}|² for phase = a − b.
    void (*raised_cosine)(std::span<const double> phase, std::span<double> out);

    /// Σ amp[i]·e^{j·phase[i]}, phases reduced to [−π, π].
    std::complex<double> (*phasor_sum)(std::span<const double> amp, std::span<const double> phase);

    /// out[i] = in[i] + offset.
    void (*add_scalar)(std::span<const double> in, double offset, std::span<double> out);

    /// Squared-difference and squared-reference sums for RMS distances.
    SumPair (*sum_squares)(std::span<const double> a, std::span<const double> b);
};

bool isa_supported(Isa isa);

/// Table for one ISA; throws oamrcs::Error when the CPU or build lacks it.
const KernelTable& kernels_for(Isa isa);

/// Table selected at first use (see header comment).
const KernelTable& kernels();

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();
}  // namespace detail

}  // namespace oamrcs::simd
