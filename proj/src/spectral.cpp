#include "iqs/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqs/errors.hpp"

namespace iqs {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The unitary acting on the
// (p,q) plane is G = diag(1, w) * [[c, s], [-s, c]] with w = conj(z)/|z|
// turning the pivot real and (c, s) the classic symmetric-Jacobi pair.
void rotate(ComplexMatrix& a, ComplexMatrix& u, std::size_t p, std::size_t q) {
    const cplx z = a(p, q);
    const double az = std::abs(z);
    if (az == 0.0) return;
    const cplx w = std::conj(z) / az;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * az);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.dim();
    // A <- A G (columns p, q)
    for (std::size_t i = 0; i < n; ++i) {
        const cplx aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * w * aiq;
        a(i, q) = s * aip + c * w * aiq;
    }
    // A <- G* A (rows p, q)
    for (std::size_t j = 0; j < n; ++j) {
        const cplx apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * std::conj(w) * aqj;
        a(q, j) = s * apj + c * std::conj(w) * aqj;
    }
    // U <- U G
    for (std::size_t i = 0; i < n; ++i) {
        const cplx uip = u(i, p), uiq = u(i, q);
        u(i, p) = c * uip - s * w * uiq;
        u(i, q) = s * uip + c * w * uiq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

// Rotate each column so its largest-modulus component is real nonnegative.
void fix_phases(ComplexMatrix& u) {
    const std::size_t n = u.dim();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t imax = 0;
        double best = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double m = std::abs(u(i, j));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (best <= 0.0) continue;
        const cplx ph = u(imax, j) / best;
        for (std::size_t i = 0; i < n; ++i) u(i, j) *= std::conj(ph);
    }
}

} // namespace

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return map_eigenvalues([](double l) { return cplx(l, 0.0); });
}

ComplexMatrix SpectralDecomposition::map_eigenvalues(const std::function<cplx(double)>& f) const {
    std::vector<cplx> d(eigenvalues.size());
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = f(eigenvalues[i]);
    return eigenvectors * ComplexMatrix::diagonal(d) * eigenvectors.adjoint();
}

SpectralDecomposition eigh(const ComplexMatrix& h, double tol) {
    const double defect = h.hermiticity_defect();
    if (!(defect <= tol))
        throw PreconditionError("eigh: input is not self-adjoint: ||H - H*||_F = " +
                                std::to_string(defect) + " > tol = " + std::to_string(tol));

    const std::size_t n = h.dim();
    ComplexMatrix a = cplx(0.5) * (h + h.adjoint());
    ComplexMatrix u = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    const double target = 1e-15 * scale;
    for (int sweep = 0; sweep < 64 && offdiag_norm(a) > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (std::abs(a(p, q)) > 1e-300) rotate(a, u, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = u(i, order[j]);
    }
    fix_phases(out.eigenvectors);
    return out;
}

ComplexMatrix pure_density(const std::vector<cplx>& u, double tol) {
    double nrm2 = 0.0;
    for (cplx x : u) nrm2 += std::norm(x);
    const double nrm = std::sqrt(nrm2);
    if (std::abs(nrm - 1.0) > tol)
        throw PreconditionError("pure_density: vector is not unit length: ||u|| = " +
                                std::to_string(nrm));
    ComplexMatrix d(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) d(i, j) = u[i] * std::conj(u[j]);
    return d;
}

} // namespace iqs
