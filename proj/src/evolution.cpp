#include "iqs/evolution.hpp"

#include <cmath>
#include <string>

#include "iqs/errors.hpp"

namespace iqs {

EvolutionTrace evolve(const ComplexMatrix& phi, const std::vector<cplx>& a0,
                      std::size_t steps) {
    if (phi.dim() != a0.size())
        throw PreconditionError("evolve: operator dim " + std::to_string(phi.dim()) +
                                " does not match state size " + std::to_string(a0.size()));
    EvolutionTrace tr;
    tr.states.reserve(steps + 1);
    tr.means.reserve(steps + 1);
    tr.states.push_back(a0);
    tr.means.push_back(a0);

    std::vector<cplx> running(a0.size(), 0.0);
    for (std::size_t t = 1; t <= steps; ++t) {
        tr.states.push_back(phi.apply(tr.states.back()));
        const auto& st = tr.states.back();
        std::vector<cplx> mean(st.size());
        for (std::size_t i = 0; i < st.size(); ++i) {
            running[i] += st[i];
            mean[i] = running[i] / static_cast<double>(t);
        }
        tr.means.push_back(std::move(mean));
    }
    return tr;
}

namespace {

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

std::vector<cplx> window_average(const std::vector<std::vector<cplx>>& seq,
                                 std::size_t begin, std::size_t end) {
    std::vector<cplx> acc(seq[begin].size(), 0.0);
    for (std::size_t t = begin; t < end; ++t)
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += seq[t][i];
    for (cplx& x : acc) x /= static_cast<double>(end - begin);
    return acc;
}

bool all_finite(const std::vector<cplx>& v) {
    for (cplx x : v)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

} // namespace

ErgodicVerdict ergodic_mean(const EvolutionTrace& trace, double tol, std::size_t window) {
    if (trace.means.empty()) throw PreconditionError("ergodic_mean: empty trace");
    ErgodicVerdict v;
    v.estimate = trace.means.back();

    const std::size_t len = trace.means.size();
    const std::size_t w = std::max<std::size_t>(1, std::min(window, len / 2));
    if (len < 2) {
        v.converged = true; // a single point cannot drift
        return v;
    }
    const auto recent = window_average(trace.means, len - w, len);
    const auto earlier = window_average(trace.means, len - 2 * w, len - w);
    v.residual = max_abs_diff(recent, earlier);
    v.converged = all_finite(v.estimate) && std::isfinite(v.residual) && v.residual < tol;
    return v;
}

EvolutionTrace markov_chain(const RealMatrix& m, const std::vector<double>& pi0,
                            std::size_t steps, double tol) {
    const std::size_t n = m.dim();
    if (pi0.size() != n) throw PreconditionError("markov_chain: distribution size mismatch");
    for (std::size_t j = 0; j < n; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m(i, j) < -tol)
                throw PreconditionError("markov_chain: negative transition probability at (" +
                                        std::to_string(i) + "," + std::to_string(j) + ")");
            col += m(i, j);
        }
        if (std::abs(col - 1.0) > tol)
            throw PreconditionError("markov_chain: column " + std::to_string(j) +
                                    " sums to " + std::to_string(col) + ", expected 1");
    }
    double total = 0.0;
    for (double x : pi0) {
        if (x < -tol) throw PreconditionError("markov_chain: initial distribution has negative mass");
        total += x;
    }
    if (std::abs(total - 1.0) > tol)
        throw PreconditionError("markov_chain: initial distribution sums to " +
                                std::to_string(total));

    std::vector<cplx> a0(pi0.begin(), pi0.end());
    return evolve(ComplexMatrix(m), a0, steps);
}

ComplexMatrix schrodinger_propagator(const ComplexMatrix& h, double t, double hbar) {
    return schrodinger_propagator(eigh(h), t, hbar);
}

ComplexMatrix schrodinger_propagator(const SpectralDecomposition& h_spec, double t,
                                     double hbar) {
    if (hbar <= 0.0) throw PreconditionError("schrodinger_propagator: hbar must be positive");
    return h_spec.map_eigenvalues(
        [&](double lambda) { return std::polar(1.0, -lambda * t / hbar); });
}

} // namespace iqs
