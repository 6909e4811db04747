// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "oamrcs/simd/kernels.hpp"

#if defined(OAMRCS_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>
#include <cstdint>

#include "sincos_constants.hpp"

namespace oamrcs::simd {

namespace {

constexpr std::size_t kLanes = 4;

struct SinCos {
    __m256d sin;
    __m256d cos;
};

inline SinCos sincos(__m256d x) {
    using namespace poly;
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kTwoOverPi)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2Hi), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2Mid), r);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(kPio2Lo), r);

    const __m256d z = _mm256_mul_pd(r, r);
    const __m256d w = _mm256_mul_pd(z, z);

    // sin(r) on the reduced interval
    __m256d s_lo = _mm256_fmadd_pd(z, _mm256_set1_pd(kS4), _mm256_set1_pd(kS3));
    s_lo = _mm256_fmadd_pd(z, s_lo, _mm256_set1_pd(kS2));
    const __m256d s_hi = _mm256_fmadd_pd(z, _mm256_set1_pd(kS6), _mm256_set1_pd(kS5));
    const __m256d s_r = _mm256_fmadd_pd(_mm256_mul_pd(z, w), s_hi, s_lo);
    const __m256d v = _mm256_mul_pd(z, r);
    const __m256d sin_r = _mm256_fmadd_pd(v, _mm256_fmadd_pd(z, s_r, _mm256_set1_pd(kS1)), r);

    // cos(r), branch-free fdlibm form
    __m256d c_lo = _mm256_fmadd_pd(z, _mm256_set1_pd(kC3), _mm256_set1_pd(kC2));
    c_lo = _mm256_mul_pd(z, _mm256_fmadd_pd(z, c_lo, _mm256_set1_pd(kC1)));
    __m256d c_hi = _mm256_fmadd_pd(z, _mm256_set1_pd(kC6), _mm256_set1_pd(kC5));
    c_hi = _mm256_fmadd_pd(z, c_hi, _mm256_set1_pd(kC4));
    const __m256d c_r = _mm256_fmadd_pd(_mm256_mul_pd(w, w), c_hi, c_lo);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d hz = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
    const __m256d w1 = _mm256_sub_pd(one, hz);
    const __m256d tail = _mm256_fmadd_pd(z, c_r, _mm256_sub_pd(_mm256_sub_pd(one, w1), hz));
    const __m256d cos_r = _mm256_add_pd(w1, tail);

    // Quadrant fix-up: q = n mod 4.
    const __m256i q = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(n));
    const __m256i one_i = _mm256_set1_epi64x(1);
    const __m256i two_i = _mm256_set1_epi64x(2);
    const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(q, one_i), one_i));
    const __m256d sin_sign =
        _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(q, two_i), 62));
    const __m256d cos_sign =
        _mm256_castsi256_pd(_mm256_slli_epi64(_mm256_and_si256(_mm256_add_epi64(q, one_i), two_i), 62));

    return {_mm256_xor_pd(_mm256_blendv_pd(sin_r, cos_r, swap), sin_sign),
            _mm256_xor_pd(_mm256_blendv_pd(cos_r, sin_r, swap), cos_sign)};
}

void raised_cosine(std::span<const double> phase, std::span<double> out) {
    const __m256d two = _mm256_set1_pd(2.0);
    const std::size_t n = phase.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d c = sincos(_mm256_loadu_pd(phase.data() + i)).cos;
        _mm256_storeu_pd(out.data() + i, _mm256_fmadd_pd(two, c, two));
    }
    if (i < n) {
        alignas(32) double buf[kLanes] = {};
        std::copy(phase.begin() + static_cast<std::ptrdiff_t>(i), phase.end(), buf);
        const __m256d c = sincos(_mm256_load_pd(buf)).cos;
        _mm256_store_pd(buf, _mm256_fmadd_pd(two, c, two));
        std::copy(buf, buf + (n - i), out.begin() + static_cast<std::ptrdiff_t>(i));
    }
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

std::complex<double> phasor_sum(std::span<const double> amp, std::span<const double> phase) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    const std::size_t n = amp.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d a = _mm256_loadu_pd(amp.data() + i);
        const SinCos sc = sincos(_mm256_loadu_pd(phase.data() + i));
        re = _mm256_fmadd_pd(a, sc.cos, re);
        im = _mm256_fmadd_pd(a, sc.sin, im);
    }
    if (i < n) {
        alignas(32) double a_buf[kLanes] = {};
        alignas(32) double p_buf[kLanes] = {};
        std::copy(amp.begin() + static_cast<std::ptrdiff_t>(i), amp.end(), a_buf);
        std::copy(phase.begin() + static_cast<std::ptrdiff_t>(i), phase.end(), p_buf);
        const __m256d a = _mm256_load_pd(a_buf);
        const SinCos sc = sincos(_mm256_load_pd(p_buf));
        re = _mm256_fmadd_pd(a, sc.cos, re);
        im = _mm256_fmadd_pd(a, sc.sin, im);
    }
    return {hsum(re), hsum(im)};
}

void add_scalar(std::span<const double> in, double offset, std::span<double> out) {
    const __m256d c = _mm256_set1_pd(offset);
    const std::size_t n = in.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_loadu_pd(in.data() + i), c));
    }
    for (; i < n; ++i) {
        out[i] = in[i] + offset;
    }
}

SumPair sum_squares(std::span<const double> a, std::span<const double> b) {
    __m256d diff = _mm256_setzero_pd();
    __m256d ref = _mm256_setzero_pd();
    const std::size_t n = a.size();
    std::size_t i = 0;
    for (; i + kLanes <= n; i += kLanes) {
        const __m256d va = _mm256_loadu_pd(a.data() + i);
        const __m256d d = _mm256_sub_pd(va, _mm256_loadu_pd(b.data() + i));
        diff = _mm256_fmadd_pd(d, d, diff);
        ref = _mm256_fmadd_pd(va, va, ref);
    }
    SumPair s{hsum(diff), hsum(ref)};
    for (; i < n; ++i) {
        const double d = a[i] - b[i];
        s.diff_sq += d * d;
        s.ref_sq += a[i] * a[i];
    }
    return s;
}

constexpr KernelTable kAvx2{Isa::Avx2, raised_cosine, phasor_sum, add_scalar, sum_squares};

}  // namespace

const KernelTable* detail::avx2_table() { return &kAvx2; }

}  // namespace oamrcs::simd

#else

namespace oamrcs::simd {
const KernelTable* detail::avx2_table() { return nullptr; }
}  // namespace oamrcs::simd

#endif
