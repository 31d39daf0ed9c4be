#pragma once

#include <vector>

#include "iqs/complex_matrix.hpp"
#include "iqs/tu_game.hpp"

namespace iqs {

// Lattice transforms on coefficient vectors over 2^n subsets, implemented as
// butterfly recursions (one stage per player, O(n 2^n)). All of them map
// real vectors to real vectors; real and complex overloads are provided.
//
// Naming follows the operator matrices: zeta sends |S> to the sum of its
// supersets (out[T] = sum over S subseteq T of in[S]); moebius is its exact
// inverse (out[T] = sum over S subseteq T of (-1)^|T\S| in[S]). Note that
// zeta applied to a game's coefficient vector is what game theorists usually
// display as the Moebius/Harsanyi summation identity v(S) = sum of dividends.

void zeta_inplace(std::vector<double>& v);
void zeta_inplace(std::vector<cplx>& v);
void moebius_inplace(std::vector<double>& v);
void moebius_inplace(std::vector<cplx>& v);

// Normalized Walsh-Hadamard: out[T] = 2^{-n/2} sum_S (-1)^{|S cap T|} in[S].
// Self-inverse and norm-preserving.
void hadamard_inplace(std::vector<double>& v);
void hadamard_inplace(std::vector<cplx>& v);

std::vector<double> zeta_apply(std::vector<double> v);
std::vector<cplx> zeta_apply(std::vector<cplx> v);
std::vector<double> moebius_apply(std::vector<double> v);
std::vector<cplx> moebius_apply(std::vector<cplx> v);
std::vector<double> hadamard_apply(std::vector<double> v);
std::vector<cplx> hadamard_apply(std::vector<cplx> v);

// Banzhaf interaction transform of a game:
// I_B(S) = (1/2)^(n-s) sum_T (-1)^|S\T| v(T). Proportional to the Hadamard
// transform: I_B(S) = (-2)^s 2^{-n/2} H(S).
std::vector<double> banzhaf_interaction(const TUGame& v);

// h(S,T) = (-1)^|S\T| vhat(T) for T subseteq S, with vhat the zeta transform
// of v; summing h(S,.) over subsets of S recovers v(S).
struct HarsanyiCoefficients {
    int n = 0;
    std::vector<double> zeta_values;

    double coefficient(subset_t s, subset_t t) const;
};

HarsanyiCoefficients harsanyi_coefficients(const TUGame& v);

// Unitary Fourier matrix with entries omega^(jk) / sqrt(k) for 1-based j, k
// and omega = exp(2 pi i / k). Differs from the usual 0-based DFT matrix by
// row/column phases (see fourier_matrix_standard and the converter below).
ComplexMatrix fourier_matrix(std::size_t k);

// Conventional 0-based DFT matrix, entries omega^(jk) / sqrt(k), j,k from 0.
ComplexMatrix fourier_matrix_standard(std::size_t k);

// Rewrites a matrix between the two conventions:
// standard = conj(omega) * diag(omega^-r) * paper * diag(omega^-c).
ComplexMatrix fourier_to_standard(const ComplexMatrix& paper_convention);

std::vector<cplx> fourier_apply(const std::vector<cplx>& v);

// M C M*. For unitary M this conjugation preserves self-adjointness and the
// spectrum, mapping eigenvectors u to M u.
ComplexMatrix conjugate(const ComplexMatrix& m, const ComplexMatrix& c);

} // namespace iqs
