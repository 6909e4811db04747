#include "oamrcs/simd/kernels.hpp"

#if defined(OAMRCS_HAVE_NEON)

#include <arm_neon.h>

#include <algorithm>

#include "sincos_constants.hpp"

namespace oamrcs::simd {

namespace {

constexpr std::size_t kLanes = 2;

struct SinCos {
    float64x2_t sin;
    float64x2_t cos;
};

inline float64x2_t splat(double v) { return vdupq_n_f64(v); }

inline SinCos sincos(float64x2_t x) {
    using namespace poly;
    const float64x2_t n = vrndnq_f64(vmulq_f64(x, splat(kTwoOverPi)));
    float64x2_t r = vfmsq_f64(x, n, splat(kPio2Hi));
    r = vfmsq_f64(r, n, splat(kPio2Mid));
    r = vfmsq_f64(r, n, splat(kPio2Lo));

    const float64x2_t z = vmulq_f64(r, r);
    const float64x2_t w = vmulq_f64(z, z);

    float64x2_t s_lo = vfmaq_f64(splat(kS3), z, splat(kS4));
    s_lo = vfmaq_f64(splat(kS2), z, s_lo);
    const float64x2_t s_hi = vfmaq_f64(splat(kS5), z, splat(kS6));
    const float64x2_t s_r = vfmaq_f64(s_lo, vmulq_f64(z, w), s_hi);
    const float64x2_t v = vmulq_f64(z, r);
    const float64x2_t sin_r = vfmaq_f64(r, v, vfmaq_f64(splat(kS1), z, s_r));

    float64x2_t c_lo = vfmaq_f64(splat(kC2), z, splat(kC3));
    c_lo = vmulq_f64(z, vfmaq_f64(splat(kC1), z, c_lo));
    float64x2_t c_hi = vfmaq_f64(splat(kC5), z, splat(kC6));
    c_hi = vfmaq_f64(splat(kC4), z, c_hi);
    const float64x2_t c_r = vfmaq_f64(c_lo, vmulq_f64(w, w), c_hi);
    const float64x2_t one = splat(1.0);
    const float64x2_t hz = vmulq_f64(splat(0.5), z);
    const float64x2_t w1 = vsubq_f64(one, hz);
    const float64x2_t tail = vfmaq_f64(vsubq_f64(vsubq_f64(one, w1), hz), z, c_r);
    const float64x2_t cos_r = vaddq_f64(w1, tail);

    const int64x2_t q = vcvtq_s64_f64(n);
    const int64x2_t one_i = vdupq_n_s64(1);
    const int64x2_t two_i = vdupq_n_s64(2);
    const uint64x2_t swap = vceqq_s64(vandq_s64(q, one_i), one_i);
    const uint64x2_t sin_sign = vshlq_n_u64(vreinterpretq_u64_s64(vandq_s64(q, two_i)), 62);
    const uint64x2_t cos_sign =
        vshlq_n_u64(vreinterpretq_u64_s64(vandq_s64(vaddq_s64(q, one_i), two_i)), 62);

    const float64x2_t s = vbslq_f64(swap, cos_r, sin_r);
    const float64x2_t c = vbslq_f64(swap, sin_r, cos_r);
    return {vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(s), sin_sign)),
            vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(c), cos_sign))};
}

void raised_cosine(std::span<const double> phase, std::span<double> out) {
    const float64x2_t two = splat(2.0);
    const std::size_t n = phase.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const float64x2_t c = sincos(vld1q_f64(phase.data() + i)).cos;
        vst1q_f64(out.data() + i, vfmaq_f64(two, two, c));
    }
    if (i < n) {
        double buf[kLanes] = {phase[i], 0.0};
        const float64x2_t c = sincos(vld1q_f64(buf)).cos;
        vst1q_f64(buf, vfmaq_f64(two, two, c));
        out[i] = buf[0];
    }
}

std::complex<double> phasor_sum(std::span<const double> amp, std::span<const double> phase) {
    float64x2_t re = splat(0.0);
    float64x2_t im = splat(0.0);
    const std::size_t n = amp.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const float64x2_t a = vld1q_f64(amp.data() + i);
        const SinCos sc = sincos(vld1q_f64(phase.data() + i));
        re = vfmaq_f64(re, a, sc.cos);
        im = vfmaq_f64(im, a, sc.sin);
    }
    if (i < n) {
        const double a_buf[kLanes] = {amp[i], 0.0};
        const double p_buf[kLanes] = {phase[i], 0.0};
        const float64x2_t a = vld1q_f64(a_buf);
        const SinCos sc = sincos(vld1q_f64(p_buf));
        re = vfmaq_f64(re, a, sc.cos);
        im = vfmaq_f64(im, a, sc.sin);
    }
    return {vaddvq_f64(re), vaddvq_f64(im)};
}

void add_scalar(std::span<const double> in, double offset, std::span<double> out) {
    const float64x2_t c = splat(offset);
    const std::size_t n = in.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        vst1q_f64(out.data() + i, vaddq_f64(vld1q_f64(in.data() + i), c));
    }
    for (; i < n; ++i) {
        out[i] = in[i] + offset;
    }
}

SumPair sum_squares(std::span<const double> a, std::span<const double> b) {
    float64x2_t diff = splat(0.0);
    float64x2_t ref = splat(0.0);
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const float64x2_t va = vld1q_f64(a.data() + i);
        const float64x2_t d = vsubq_f64(va, vld1q_f64(b.data() + i));
        diff = vfmaq_f64(diff, d, d);
        ref = vfmaq_f64(ref, va, va);
    }
    SumPair s{vaddvq_f64(diff), vaddvq_f64(ref)};
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s.diff_sq += d * d;
        s.ref_sq += a[i] * a[i];
    }
    return s;
}

constexpr KernelTable kNeon{Isa::Neon, raised_cosine, phasor_sum, add_scalar, sum_squares};

}  // namespace

const KernelTable* detail::neon_table() { return &kNeon; }

}  // namespace oamrcs::simd

#else

namespace oamrcs::simd {
const KernelTable* detail::neon_table() { return nullptr; }
}  // namespace oamrcs::simd

#endif
