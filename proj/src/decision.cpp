#include "iqs/decision.hpp"

#include <cmath>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/kern.hpp"
#include "iqs/spectral.hpp"

namespace iqs {

namespace {

std::size_t pow_size(int k, int n) {
    std::size_t s = 1;
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(k);
    return s;
}

} // namespace

double DecisionState::norm() const {
    return std::sqrt(kern::dotc(coeffs.data(), coeffs.data(), coeffs.size()).real());
}

DecisionState DecisionState::proper_state(int n, int k, std::vector<cplx> coeffs, double tol) {
    if (n < 1 || k < 2) throw PreconditionError("DecisionState: need n >= 1 and k >= 2");
    if (coeffs.size() != pow_size(k, n))
        throw PreconditionError("DecisionState: expected k^n = " +
                                std::to_string(pow_size(k, n)) + " coefficients, got " +
                                std::to_string(coeffs.size()));
    DecisionState s{n, k, std::move(coeffs), true};
    const double nrm = s.norm();
    if (std::abs(nrm - 1.0) > tol)
        throw PreconditionError("DecisionState: proper state must be unit length, ||coeffs|| = " +
                                std::to_string(nrm));
    return s;
}

DecisionState DecisionState::valuation(int n, std::vector<cplx> coeffs) {
    if (n < 1) throw PreconditionError("DecisionState: need n >= 1");
    if (coeffs.size() != pow_size(2, n))
        throw PreconditionError("DecisionState: expected 2^n coefficients");
    return DecisionState{n, 2, std::move(coeffs), false};
}

DecisionState DecisionState::basis(int n, int k, std::size_t index) {
    std::vector<cplx> c(pow_size(k, n), 0.0);
    if (index >= c.size()) throw PreconditionError("DecisionState::basis: index out of range");
    c[index] = 1.0;
    return DecisionState{n, k, std::move(c), true};
}

DecisionState qubit(cplx c0, cplx c1, bool normalize) {
    double nrm = std::sqrt(std::norm(c0) + std::norm(c1));
    if (nrm == 0.0) throw PreconditionError("qubit: zero coefficient vector");
    if (normalize) {
        c0 /= nrm;
        c1 /= nrm;
    }
    return DecisionState::proper_state(1, 2, {c0, c1});
}

DecisionState tensor(const DecisionState& a, const DecisionState& b) {
    if (a.k != b.k) throw PreconditionError("tensor: alternative counts differ");
    const std::size_t na = a.size(), nb = b.size();
    std::vector<cplx> c(na * nb);
    for (std::size_t s = 0; s < nb; ++s)
        for (std::size_t p = 0; p < na; ++p) c[p + na * s] = a.coeffs[p] * b.coeffs[s];
    DecisionState out{a.n + b.n, a.k, std::move(c), a.proper && b.proper};
    return out;
}

std::vector<double> outcome_probabilities(const DecisionState& s) {
    double nrm2 = kern::dotc(s.coeffs.data(), s.coeffs.data(), s.size()).real();
    if (nrm2 == 0.0) throw PreconditionError("outcome_probabilities: zero state");
    std::vector<double> p(s.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(s.coeffs[i]) / nrm2;
    return p;
}

ComplexMatrix density(const DecisionState& s) {
    if (!s.proper)
        throw PreconditionError("density: state is a non-normalized valuation");
    return pure_density(s.coeffs);
}

namespace {

DecisionState factor_state(int n, int k, std::vector<cplx> coeffs) {
    DecisionState s{n, k, std::move(coeffs), true};
    s.proper = std::abs(s.norm() - 1.0) <= 1e-8;
    return s;
}

// One-sided Jacobi SVD on a column-major matrix: unitary column rotations
// drive the implicit Gram matrix to diagonal form, after which the column
// norms are the singular values (computed with high relative accuracy, which
// the rank-1 test needs; a Gram eigensolve would square away half the
// precision). Columns of w end up as left singular vectors times sigma.
std::vector<double> onesided_jacobi_svd(std::vector<cplx>& w, std::size_t rows,
                                        std::size_t cols) {
    auto col = [&](std::size_t j) { return w.data() + j * rows; };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < cols; ++i) {
            for (std::size_t j = i + 1; j < cols; ++j) {
                double a = 0.0, b = 0.0;
                cplx g = 0.0;
                for (std::size_t p = 0; p < rows; ++p) {
                    a += std::norm(col(i)[p]);
                    b += std::norm(col(j)[p]);
                    g += std::conj(col(i)[p]) * col(j)[p];
                }
                const double ag = std::abs(g);
                if (ag <= 1e-15 * std::sqrt(a * b) || ag == 0.0) continue;
                rotated = true;
                const cplx ph = std::conj(g) / ag;
                const double tau = (b - a) / (2.0 * ag);
                const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                            : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                for (std::size_t p = 0; p < rows; ++p) {
                    const cplx ci = col(i)[p], cj = col(j)[p];
                    col(i)[p] = cs * ci - sn * ph * cj;
                    col(j)[p] = sn * ci + cs * ph * cj;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sigma(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        double n2 = 0.0;
        for (std::size_t p = 0; p < rows; ++p) n2 += std::norm(col(j)[p]);
        sigma[j] = std::sqrt(n2);
    }
    return sigma;
}

} // namespace

Factorization is_reducible(const DecisionState& s, int m, double tol) {
    if (m <= 0 || m >= s.n)
        throw PreconditionError("is_reducible: split position must satisfy 0 < m < n");
    const std::size_t rows = pow_size(s.k, m);
    const std::size_t cols = pow_size(s.k, s.n - m);
    const auto& c = s.coeffs;
    auto entry = [&](std::size_t p, std::size_t q) { return c[p + rows * q]; };

    // run the SVD on whichever orientation has fewer columns
    const bool tall = cols <= rows;
    const std::size_t wr = tall ? rows : cols;
    const std::size_t wc = tall ? cols : rows;
    std::vector<cplx> w(wr * wc);
    for (std::size_t p = 0; p < rows; ++p)
        for (std::size_t q = 0; q < cols; ++q) {
            if (tall)
                w[q * rows + p] = entry(p, q);
            else
                w[p * cols + q] = std::conj(entry(p, q)); // adjoint, column-major
        }
    const auto sigma = onesided_jacobi_svd(w, wr, wc);

    std::size_t jmax = 0, jsecond = 0;
    for (std::size_t j = 1; j < wc; ++j)
        if (sigma[j] > sigma[jmax]) jmax = j;
    jsecond = jmax == 0 ? 1 : 0;
    for (std::size_t j = 0; j < wc; ++j)
        if (j != jmax && sigma[j] > sigma[jsecond]) jsecond = j;

    Factorization out;
    out.sigma1 = sigma[jmax];
    out.sigma2 = wc > 1 ? sigma[jsecond] : 0.0;
    if (out.sigma1 == 0.0) throw PreconditionError("is_reducible: zero state");
    out.reducible = out.sigma2 <= tol * out.sigma1;
    if (!out.reducible) return out;

    // Unit prefix factor from the dominant singular direction, then the
    // suffix factor by projection; their product reproduces the state
    // including its global phase.
    std::vector<cplx> prefix(rows);
    if (tall) {
        for (std::size_t p = 0; p < rows; ++p) prefix[p] = w[jmax * rows + p] / out.sigma1;
    } else {
        // the dominant adjoint column spans the right singular direction;
        // mapping it through the matrix reaches the prefix side
        for (std::size_t p = 0; p < rows; ++p) {
            cplx acc = 0.0;
            for (std::size_t q = 0; q < cols; ++q)
                acc += entry(p, q) * w[jmax * cols + q] / out.sigma1;
            prefix[p] = acc / out.sigma1;
        }
    }
    std::vector<cplx> suffix(cols);
    for (std::size_t q = 0; q < cols; ++q) {
        cplx acc = 0.0;
        for (std::size_t p = 0; p < rows; ++p) acc += std::conj(prefix[p]) * entry(p, q);
        suffix[q] = acc;
    }
    out.factors = {factor_state(m, s.k, std::move(prefix)),
                   factor_state(s.n - m, s.k, std::move(suffix))};
    return out;
}

DecisionState fuzzy_state(const std::vector<double>& w) {
    const int n = static_cast<int>(w.size());
    if (n < 1) throw PreconditionError("fuzzy_state: need at least one player");
    for (double x : w)
        if (x < 0.0 || x > 1.0)
            throw PreconditionError("fuzzy_state: participation probabilities must lie in [0,1]");
    std::vector<cplx> c(std::size_t{1} << n);
    for (subset_t mask = 0; mask < c.size(); ++mask) {
        double amp = 1.0;
        for (int j = 0; j < n; ++j)
            amp *= (mask & (subset_t{1} << j)) ? std::sqrt(w[j]) : std::sqrt(1.0 - w[j]);
        c[mask] = amp;
    }
    return DecisionState{n, 2, std::move(c), true};
}

DecisionState multichoice_state(int n, int k, std::vector<cplx> coeffs, double tol) {
    return DecisionState::proper_state(n, k, std::move(coeffs), tol);
}

DecisionState valuation_state(const TUGame& v) {
    std::vector<cplx> c(v.values.begin(), v.values.end());
    return DecisionState::valuation(v.n, std::move(c));
}

} // namespace iqs
