#include <cmath>

#include "oamrcs/simd/kernels.hpp"

namespace oamrcs::simd {

namespace {

void raised_cosine(std::span<const double> phase, std::span<double> out) {
    for (std::size_t i = 0; i < phase.size(); ++i) {
        out[i] = 2.0 * (1.0 + std::cos(phase[i]));
    }
}

std::complex<double> phasor_sum(std::span<const double> amp, std::span<const double> phase) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        re += amp[i] * std::cos(phase[i]);
        im += amp[i] * std::sin(phase[i]);
    }
    return {re, im};
}

void add_scalar(std::span<const double> in, double offset, std::span<double> out) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        out[i] = in[i] + offset;
    }
}

SumPair sum_squares(std::span<const double> a, std::span<const double> b) {
    SumPair s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s.diff_sq += d * d;
        s.ref_sq += a[i] * a[i];
    }
    return s;
}

constexpr KernelTable kScalar{Isa::Scalar, raised_cosine, phasor_sum, add_scalar, sum_squares};

}  // namespace

const KernelTable& detail::scalar_table() { return kScalar; }

}  // namespace oamrcs::simd
