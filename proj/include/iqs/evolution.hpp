#pragma once

#include <vector>

#include "iqs/complex_matrix.hpp"
#include "iqs/spectral.hpp"

namespace iqs {

// Orbit of a linear evolution operator together with its running Cesaro
// averages. states[t] is the state after t applications; means[t] is the
// average of states[1..t] (means[0] repeats the initial state so the two
// sequences stay aligned).
struct EvolutionTrace {
    std::vector<std::vector<cplx>> states;
    std::vector<std::vector<cplx>> means;

    std::size_t steps() const { return states.empty() ? 0 : states.size() - 1; }
};

// Iterates phi starting from a0 for `steps` applications. Matrix-valued
// states evolve through their row-major vectorization: pass the flattened
// d x d state with an operator of dimension d^2.
EvolutionTrace evolve(const ComplexMatrix& phi, const std::vector<cplx>& a0, std::size_t steps);

// Windowed Cauchy test on the Cesaro averages: converged when the average of
// the last `window` means differs from the average of the preceding window by
// less than tol (in the max norm). A diagnostic, not a proof: boundedness over
// infinite time is not decidable from a finite sample.
struct ErgodicVerdict {
    bool converged = false;
    std::vector<cplx> estimate; // last running mean
    double residual = 0.0;      // window-average difference that was tested
};

ErgodicVerdict ergodic_mean(const EvolutionTrace& trace, double tol = 1e-6,
                            std::size_t window = 32);

// Classical Markov chain: requires nonnegative entries and unit column sums;
// each state is the distribution M^t pi0.
EvolutionTrace markov_chain(const RealMatrix& m, const std::vector<double>& pi0,
                            std::size_t steps, double tol = 1e-9);

// U_t = exp(-i H t / hbar), computed spectrally from the self-adjoint H
// so the result is unitary up to the eigendecomposition tolerance.
ComplexMatrix schrodinger_propagator(const ComplexMatrix& h, double t, double hbar = 1.0);
ComplexMatrix schrodinger_propagator(const SpectralDecomposition& h_spec, double t,
                                     double hbar = 1.0);

} // namespace iqs
