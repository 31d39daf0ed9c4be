// AVX2 kernel lane. Compiled unconditionally on x86-64 via function target
// attributes; only ever called after the runtime CPU probe in detect_level().

#ifdef __x86_64__

#include "iqs/kern.hpp"

#include <cmath>
#include <cstdint>
#include <immintrin.h>

#define IQS_AVX2 __attribute__((target("avx2,fma")))

namespace iqs::kern::avx2 {

namespace {

IQS_AVX2 inline double hsum(__m256d x) {
    __m128d lo = _mm256_castpd256_pd128(x);
    __m128d hi = _mm256_extractf128_pd(x, 1);
    __m128d s = _mm_add_pd(lo, hi);
    s = _mm_hadd_pd(s, s);
    return _mm_cvtsd_f64(s);
}

// [re, im] pairs -> [im, re] within each complex lane
IQS_AVX2 inline __m256d swap_halves(__m256d x) { return _mm256_permute_pd(x, 0b0101); }

} // namespace

IQS_AVX2 void zeta_stage(double* v, std::size_t n, std::size_t h) {
    if (h < 4) return ref::zeta_stage(v, n, h);
    for (std::size_t base = 0; base < n; base += 2 * h) {
        double* lo = v + base;
        double* hi = v + base + h;
        for (std::size_t j = 0; j < h; j += 4) {
            __m256d a = _mm256_loadu_pd(lo + j);
            __m256d b = _mm256_loadu_pd(hi + j);
            _mm256_storeu_pd(hi + j, _mm256_add_pd(b, a));
        }
    }
}

IQS_AVX2 void moebius_stage(double* v, std::size_t n, std::size_t h) {
    if (h < 4) return ref::moebius_stage(v, n, h);
    for (std::size_t base = 0; base < n; base += 2 * h) {
        double* lo = v + base;
        double* hi = v + base + h;
        for (std::size_t j = 0; j < h; j += 4) {
            __m256d a = _mm256_loadu_pd(lo + j);
            __m256d b = _mm256_loadu_pd(hi + j);
            _mm256_storeu_pd(hi + j, _mm256_sub_pd(b, a));
        }
    }
}

IQS_AVX2 void hadamard_stage(double* v, std::size_t n, std::size_t h) {
    if (h < 4) return ref::hadamard_stage(v, n, h);
    const __m256d s = _mm256_set1_pd(1.0 / std::sqrt(2.0));
    for (std::size_t base = 0; base < n; base += 2 * h) {
        double* lo = v + base;
        double* hi = v + base + h;
        for (std::size_t j = 0; j < h; j += 4) {
            __m256d a = _mm256_loadu_pd(lo + j);
            __m256d b = _mm256_loadu_pd(hi + j);
            _mm256_storeu_pd(lo + j, _mm256_mul_pd(_mm256_add_pd(a, b), s));
            _mm256_storeu_pd(hi + j, _mm256_mul_pd(_mm256_sub_pd(a, b), s));
        }
    }
}

IQS_AVX2 void banzhaf_stage(double* v, std::size_t n, std::size_t h) {
    if (h < 4) return ref::banzhaf_stage(v, n, h);
    const __m256d half = _mm256_set1_pd(0.5);
    for (std::size_t base = 0; base < n; base += 2 * h) {
        double* lo = v + base;
        double* hi = v + base + h;
        for (std::size_t j = 0; j < h; j += 4) {
            __m256d a = _mm256_loadu_pd(lo + j);
            __m256d b = _mm256_loadu_pd(hi + j);
            _mm256_storeu_pd(lo + j, _mm256_mul_pd(_mm256_add_pd(a, b), half));
            _mm256_storeu_pd(hi + j, _mm256_sub_pd(b, a));
        }
    }
}

IQS_AVX2 double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double res = hsum(acc);
    for (; i < n; ++i) res += a[i] * b[i];
    return res;
}

IQS_AVX2 cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    // flip the even (re*im-cross) lanes so a full horizontal sum yields Im
    const __m256d neg_even = _mm256_castsi256_pd(
        _mm256_set_epi64x(0, INT64_MIN, 0, INT64_MIN));
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(ad + 2 * i);
        __m256d y = _mm256_loadu_pd(bd + 2 * i);
        acc_re = _mm256_fmadd_pd(x, y, acc_re);
        __m256d cross = _mm256_mul_pd(swap_halves(x), y);
        acc_im = _mm256_add_pd(acc_im, _mm256_xor_pd(cross, neg_even));
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

IQS_AVX2 cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
    const double* ad = reinterpret_cast<const double*>(a);
    const double* bd = reinterpret_cast<const double*>(b);
    const __m256d neg_odd = _mm256_castsi256_pd(
        _mm256_set_epi64x(INT64_MIN, 0, INT64_MIN, 0));
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d x = _mm256_loadu_pd(ad + 2 * i);
        __m256d y = _mm256_loadu_pd(bd + 2 * i);
        acc_re = _mm256_add_pd(acc_re, _mm256_xor_pd(_mm256_mul_pd(x, y), neg_odd));
        acc_im = _mm256_fmadd_pd(swap_halves(x), y, acc_im);
    }
    double re = hsum(acc_re);
    double im = hsum(acc_im);
    for (; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

IQS_AVX2 void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    const double* xd = reinterpret_cast<const double*>(x);
    double* yd = reinterpret_cast<double*>(y);
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, swap_halves(xv)));
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

} // namespace iqs::kern::avx2

#endif // __x86_64__
