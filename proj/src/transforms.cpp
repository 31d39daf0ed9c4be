#include "iqs/transforms.hpp"

#include <cmath>
#include <numbers>

#include "iqs/errors.hpp"
#include "iqs/kern.hpp"

namespace iqs {

namespace {

std::size_t check_power_of_two(std::size_t len) {
    if (len == 0 || (len & (len - 1)) != 0)
        throw PreconditionError("transform: vector length must be a power of two");
    return len;
}

// Runs one butterfly stage per bit. Complex vectors reuse the double kernels
// on their interleaved layout (every stage is linear with real coefficients).
template <typename Stage>
void run_stages(double* data, std::size_t len, Stage stage) {
    for (std::size_t h = 1; h < len; h <<= 1) stage(data, len, h);
}

template <typename Stage>
void run_stages(cplx* data, std::size_t len, Stage stage) {
    for (std::size_t h = 1; h < len; h <<= 1)
        stage(reinterpret_cast<double*>(data), 2 * len, 2 * h);
}

} // namespace

void zeta_inplace(std::vector<double>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::zeta_stage);
}
void zeta_inplace(std::vector<cplx>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::zeta_stage);
}
void moebius_inplace(std::vector<double>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::moebius_stage);
}
void moebius_inplace(std::vector<cplx>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::moebius_stage);
}
void hadamard_inplace(std::vector<double>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::hadamard_stage);
}
void hadamard_inplace(std::vector<cplx>& v) {
    run_stages(v.data(), check_power_of_two(v.size()), kern::hadamard_stage);
}

std::vector<double> zeta_apply(std::vector<double> v) { zeta_inplace(v); return v; }
std::vector<cplx> zeta_apply(std::vector<cplx> v) { zeta_inplace(v); return v; }
std::vector<double> moebius_apply(std::vector<double> v) { moebius_inplace(v); return v; }
std::vector<cplx> moebius_apply(std::vector<cplx> v) { moebius_inplace(v); return v; }
std::vector<double> hadamard_apply(std::vector<double> v) { hadamard_inplace(v); return v; }
std::vector<cplx> hadamard_apply(std::vector<cplx> v) { hadamard_inplace(v); return v; }

std::vector<double> banzhaf_interaction(const TUGame& v) {
    std::vector<double> out = v.values;
    run_stages(out.data(), check_power_of_two(out.size()), kern::banzhaf_stage);
    return out;
}

double HarsanyiCoefficients::coefficient(subset_t s, subset_t t) const {
    if (!is_subset_of(t, s))
        throw PreconditionError("harsanyi: coefficient defined only for T subseteq S");
    const int sign = popcount(s & ~t) % 2 == 0 ? 1 : -1;
    return sign * zeta_values[t];
}

HarsanyiCoefficients harsanyi_coefficients(const TUGame& v) {
    return HarsanyiCoefficients{v.n, zeta_apply(v.values)};
}

ComplexMatrix fourier_matrix(std::size_t k) {
    if (k == 0) throw PreconditionError("fourier_matrix: k must be positive");
    ComplexMatrix m(k);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            // omega^(jk) at 1-based j = r+1, k = c+1, reduced mod k
            const std::size_t e = ((r + 1) * (c + 1)) % k;
            m(r, c) = std::polar(scale, step * static_cast<double>(e));
        }
    }
    return m;
}

ComplexMatrix fourier_matrix_standard(std::size_t k) {
    if (k == 0) throw PreconditionError("fourier_matrix: k must be positive");
    ComplexMatrix m(k);
    const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k));
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            m(r, c) = std::polar(scale, step * static_cast<double>((r * c) % k));
    return m;
}

ComplexMatrix fourier_to_standard(const ComplexMatrix& paper) {
    const std::size_t k = paper.dim();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(k);
    ComplexMatrix out(k);
    const cplx omega_conj = std::polar(1.0, -step);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c)
            out(r, c) = omega_conj * std::polar(1.0, -step * static_cast<double>(r)) *
                        paper(r, c) * std::polar(1.0, -step * static_cast<double>(c));
    return out;
}

std::vector<cplx> fourier_apply(const std::vector<cplx>& v) {
    return fourier_matrix(v.size()).apply(v);
}

ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& c) {
    if (m.dim() != c.dim()) throw PreconditionError("conjugate: dimension mismatch");
    return m * c * m.adjoint();
}

} // namespace iqs
