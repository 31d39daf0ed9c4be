#pragma once

#include <complex>
#include <cstddef>

// Low-level arithmetic kernels behind the matrix and lattice-transform code.
//
// Every kernel has a plain scalar implementation in kern::ref and, on x86-64,
// an AVX2 variant in kern::avx2. The top-level functions dispatch on the level
// selected at startup (best supported by the CPU, overridable through the
// IQS_SIMD_LEVEL environment variable or force_level()). The two lanes are
// equivalence-tested against each other in the unit suite.
//
// Butterfly stages operate in place on an array of n doubles split into
// blocks of 2h: within each block, lo = v[0..h) and hi = v[h..2h) are
// combined pairwise. n must be a multiple of 2h. Complex vectors reuse the
// same stages on their interleaved (re,im) layout with doubled lengths,
// since every stage is linear with real coefficients.

namespace iqs::kern {

using cplx = std::complex<double>;

enum class Level { scalar = 0, avx2 = 1 };

const char* level_name(Level level);
Level detect_level();          // CPU probe + IQS_SIMD_LEVEL override
Level active_level();
void force_level(Level level); // tests exercise both lanes through this

void zeta_stage(double* v, std::size_t n, std::size_t h);     // hi += lo
void moebius_stage(double* v, std::size_t n, std::size_t h);  // hi -= lo
void hadamard_stage(double* v, std::size_t n, std::size_t h); // (lo,hi) <- ((lo+hi), (lo-hi)) / sqrt(2)
void banzhaf_stage(double* v, std::size_t n, std::size_t h);  // (lo,hi) <- ((lo+hi)/2, hi-lo)

double dot(const double* a, const double* b, std::size_t n);
cplx dotc(const cplx* a, const cplx* b, std::size_t n);  // sum conj(a_i) * b_i
cplx dotu(const cplx* a, const cplx* b, std::size_t n);  // sum a_i * b_i
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n); // y += alpha * x

namespace ref {
void zeta_stage(double* v, std::size_t n, std::size_t h);
void moebius_stage(double* v, std::size_t n, std::size_t h);
void hadamard_stage(double* v, std::size_t n, std::size_t h);
void banzhaf_stage(double* v, std::size_t n, std::size_t h);
double dot(const double* a, const double* b, std::size_t n);
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
} // namespace ref

#ifdef __x86_64__
namespace avx2 {
void zeta_stage(double* v, std::size_t n, std::size_t h);
void moebius_stage(double* v, std::size_t n, std::size_t h);
void hadamard_stage(double* v, std::size_t n, std::size_t h);
void banzhaf_stage(double* v, std::size_t n, std::size_t h);
double dot(const double* a, const double* b, std::size_t n);
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
} // namespace avx2
#endif

} // namespace iqs::kern
