#pragma once

#include <vector>

#include "iqs/interaction.hpp"
#include "iqs/spectral.hpp"

namespace iqs {

// A linear functional on interaction instances, represented by its matrix F:
// f(A) = <F|A> = <F_herm|A_herm>.
struct Measurement {
    RealMatrix f;

    std::size_t dim() const { return f.dim(); }
};

// <F|A>, evaluated in real coordinates and cross-checked against the
// self-adjoint coordinates; the two routes must agree to ~1e-10.
double measure(const Measurement& f, const InteractionState& s);

// <F_herm|C> for a self-adjoint matrix C (e.g. a density); the value is real.
double measure(const Measurement& f, const ComplexMatrix& hermitian_state);

// Joint spectral distribution of a measurement applied to a state:
// p[x][y] = |<V_y, U_x>|^2 over eigenvector pairs of the state's and the
// measurement's self-adjoint representations. Entries are nonnegative and
// sum to one; sum_xy lambda_x mu_y p_xy reproduces the measured value.
struct JointDistribution {
    std::vector<double> state_eigenvalues;       // lambda_x
    std::vector<double> measurement_eigenvalues; // mu_y
    RealMatrix p;                                // row x, column y
    int clamped = 0;                             // entries in [-tol, 0) rounded up to zero

    double expected_value() const;
    double total() const;
};

JointDistribution joint_probabilities(const Measurement& f, const InteractionState& s,
                                      double tol = 1e-12);

// phi_i(v) = sum over S not containing i of (n-s-1)! s! / n! * (v(S+i) - v(S)).
// The numerator is accumulated first and divided by n! once, so integer-valued
// games give exact rational-over-n! results.
std::vector<double> shapley_value(const TUGame& v);

// Coefficients w with phi_i(v) = sum_S w(S) v(S); feeding them through
// as_measurement reproduces the Shapley value as a diagonal measurement.
std::vector<double> shapley_weights(int player, int n);

// Diagonal measurement F_SS = weights[S] on the 2^n-dimensional activity
// representation of a game.
Measurement as_measurement(const std::vector<double>& weights);

} // namespace iqs
