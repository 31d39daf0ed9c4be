#include "iqs/kern.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace iqs::kern {

const char* level_name(Level level) {
    switch (level) {
        case Level::scalar: return "scalar";
        case Level::avx2: return "avx2";
    }
    return "?";
}

Level detect_level() {
    Level best = Level::scalar;
#ifdef __x86_64__
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        best = Level::avx2;
    }
#endif
    if (const char* env = std::getenv("IQS_SIMD_LEVEL")) {
        if (std::strcmp(env, "scalar") == 0) return Level::scalar;
#ifdef __x86_64__
        if (std::strcmp(env, "avx2") == 0 && best == Level::avx2) return Level::avx2;
#endif
    }
    return best;
}

namespace {
Level g_level = detect_level();
}

Level active_level() { return g_level; }
void force_level(Level level) { g_level = level; }

namespace ref {

void zeta_stage(double* v, std::size_t n, std::size_t h) {
    for (std::size_t base = 0; base < n; base += 2 * h)
        for (std::size_t j = 0; j < h; ++j) v[base + h + j] += v[base + j];
}

void moebius_stage(double* v, std::size_t n, std::size_t h) {
    for (std::size_t base = 0; base < n; base += 2 * h)
        for (std::size_t j = 0; j < h; ++j) v[base + h + j] -= v[base + j];
}

void hadamard_stage(double* v, std::size_t n, std::size_t h) {
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t base = 0; base < n; base += 2 * h) {
        for (std::size_t j = 0; j < h; ++j) {
            const double lo = v[base + j];
            const double hi = v[base + h + j];
            v[base + j] = (lo + hi) * s;
            v[base + h + j] = (lo - hi) * s;
        }
    }
}

void banzhaf_stage(double* v, std::size_t n, std::size_t h) {
    for (std::size_t base = 0; base < n; base += 2 * h) {
        for (std::size_t j = 0; j < h; ++j) {
            const double lo = v[base + j];
            const double hi = v[base + h + j];
            v[base + j] = (lo + hi) * 0.5;
            v[base + h + j] = hi - lo;
        }
    }
}

double dot(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    }
    return {re, im};
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

} // namespace ref

#ifdef __x86_64__
#define IQS_DISPATCH(fn, ...) \
    do { \
        if (g_level == Level::avx2) return avx2::fn(__VA_ARGS__); \
        return ref::fn(__VA_ARGS__); \
    } while (0)
#else
#define IQS_DISPATCH(fn, ...) return ref::fn(__VA_ARGS__)
#endif

void zeta_stage(double* v, std::size_t n, std::size_t h) { IQS_DISPATCH(zeta_stage, v, n, h); }
void moebius_stage(double* v, std::size_t n, std::size_t h) { IQS_DISPATCH(moebius_stage, v, n, h); }
void hadamard_stage(double* v, std::size_t n, std::size_t h) { IQS_DISPATCH(hadamard_stage, v, n, h); }
void banzhaf_stage(double* v, std::size_t n, std::size_t h) { IQS_DISPATCH(banzhaf_stage, v, n, h); }
double dot(const double* a, const double* b, std::size_t n) { IQS_DISPATCH(dot, a, b, n); }
cplx dotc(const cplx* a, const cplx* b, std::size_t n) { IQS_DISPATCH(dotc, a, b, n); }
cplx dotu(const cplx* a, const cplx* b, std::size_t n) { IQS_DISPATCH(dotu, a, b, n); }
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) { IQS_DISPATCH(axpy, alpha, x, y, n); }

#undef IQS_DISPATCH

} // namespace iqs::kern
