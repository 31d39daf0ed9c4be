#include "iqs/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/kern.hpp"

namespace iqs {

double measure(const Measurement& f, const InteractionState& s) {
    if (f.dim() != s.dim())
        throw PreconditionError("measure: measurement dim " + std::to_string(f.dim()) +
                                " does not match state dim " + std::to_string(s.dim()));
    const double via_real = frobenius_inner(f.f, s.matrix);
    const double via_herm = frobenius_inner(hermitian_repr(f.f), s.hermitian).real();
    const double scale = std::max(1.0, f.f.frobenius_norm() * s.matrix.frobenius_norm());
    if (std::abs(via_real - via_herm) > 1e-10 * scale)
        throw std::logic_error("measure: real and self-adjoint evaluations disagree");
    return via_real;
}

double measure(const Measurement& f, const ComplexMatrix& hermitian_state) {
    if (f.dim() != hermitian_state.dim())
        throw PreconditionError("measure: dimension mismatch");
    return frobenius_inner(hermitian_repr(f.f), hermitian_state).real();
}

double JointDistribution::expected_value() const {
    double acc = 0.0;
    for (std::size_t x = 0; x < state_eigenvalues.size(); ++x)
        for (std::size_t y = 0; y < measurement_eigenvalues.size(); ++y)
            acc += state_eigenvalues[x] * measurement_eigenvalues[y] * p(x, y);
    return acc;
}

double JointDistribution::total() const {
    double acc = 0.0;
    for (double v : p.data()) acc += v;
    return acc;
}

JointDistribution joint_probabilities(const Measurement& f, const InteractionState& s,
                                      double tol) {
    if (f.dim() != s.dim())
        throw PreconditionError("joint_probabilities: dimension mismatch");
    const SpectralDecomposition sd = eigh(s.hermitian);
    const SpectralDecomposition fd = eigh(hermitian_repr(f.f));
    const std::size_t n = s.dim();

    JointDistribution out;
    out.state_eigenvalues = sd.eigenvalues;
    out.measurement_eigenvalues = fd.eigenvalues;
    out.p = RealMatrix(n);
    std::vector<cplx> ux(n), vy(n);
    for (std::size_t x = 0; x < n; ++x) {
        ux = sd.eigenvectors.column(x);
        for (std::size_t y = 0; y < n; ++y) {
            vy = fd.eigenvectors.column(y);
            const double pxy = std::norm(kern::dotc(vy.data(), ux.data(), n));
            if (pxy < -tol)
                throw std::logic_error("joint_probabilities: negative probability");
            if (pxy < 0.0) ++out.clamped;
            out.p(x, y) = pxy < 0.0 ? 0.0 : pxy;
        }
    }
    return out;
}

namespace {

// factorials fit a double exactly up to 18!; beyond that the relative error
// stays at machine precision, which is fine at the documented n <= ~20 scale
double factorial(int k) {
    double acc = 1.0;
    for (int i = 2; i <= k; ++i) acc *= i;
    return acc;
}

} // namespace

std::vector<double> shapley_value(const TUGame& v) {
    const int n = v.n;
    if (n < 1) throw PreconditionError("shapley_value: need at least one player");
    const subset_t full = static_cast<subset_t>((std::size_t{1} << n) - 1);
    std::vector<double> fact(n + 1);
    for (int k = 0; k <= n; ++k) fact[k] = factorial(k);

    std::vector<double> phi(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const subset_t bit = subset_t{1} << i;
        double numerator = 0.0;
        // iterate S over subsets of N \ {i}
        const subset_t rest = full & ~bit;
        subset_t s = 0;
        while (true) {
            const int sz = popcount(s);
            numerator += fact[n - sz - 1] * fact[sz] * (v.value(s | bit) - v.value(s));
            if (s == rest) break;
            s = (s - rest) & rest; // next subset of rest
        }
        phi[i] = numerator / fact[n];
    }
    return phi;
}

std::vector<double> shapley_weights(int player, int n) {
    if (player < 0 || player >= n) throw PreconditionError("shapley_weights: player out of range");
    std::vector<double> fact(n + 1);
    for (int k = 0; k <= n; ++k) fact[k] = factorial(k);
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> w(size, 0.0);
    for (subset_t t = 0; t < size; ++t) {
        const int tz = popcount(t);
        if (t & (subset_t{1} << player))
            w[t] = fact[n - tz] * fact[tz - 1] / fact[n];
        else
            w[t] = -fact[n - tz - 1] * fact[tz] / fact[n];
    }
    return w;
}

Measurement as_measurement(const std::vector<double>& weights) {
    return Measurement{RealMatrix::diagonal(weights)};
}

} // namespace iqs
