#pragma once

#include <array>
#include <string>
#include <vector>

#include "iqs/complex_matrix.hpp"
#include "iqs/real_matrix.hpp"
#include "iqs/tu_game.hpp"

namespace iqs {

// State of an interaction system: the real matrix of pairwise interaction
// coefficients together with its symmetric part, skew part and self-adjoint
// representation sym + i*skew, all cached at construction.
struct InteractionState {
    std::vector<std::string> agents;
    RealMatrix matrix;      // A
    RealMatrix symmetric;   // (A + A^T) / 2
    RealMatrix skew;        // (A - A^T) / 2
    ComplexMatrix hermitian; // symmetric + i * skew

    std::size_t dim() const { return matrix.dim(); }

    static InteractionState from_matrix(RealMatrix a,
                                        std::vector<std::string> labels = {});
};

// (A + A^T)/2 and (A - A^T)/2. Their squared Frobenius norms add up to
// ||A||^2 (the two subspaces are orthogonal).
std::pair<RealMatrix, RealMatrix> symmetry_split(const RealMatrix& a);

// A^+ + i A^-: the isometric embedding of real matrices into self-adjoint
// complex matrices.
ComplexMatrix hermitian_repr(const RealMatrix& a);

// Inverse of hermitian_repr: Re(H) + Im(H) for self-adjoint H.
RealMatrix from_hermitian(const ComplexMatrix& h, double tol = 1e-9);

// I, pi1 = diag(1,-1), pi2 = [[0,1],[1,0]], pi3 = [[0,-1],[1,0]].
// pi1, pi2 span the traceless symmetric 2x2 matrices, pi3 the skew ones;
// the hermitian representations of pi1, pi2, i*pi3 are the Pauli matrices.
std::array<RealMatrix, 4> pauli_basis();

// Unique coefficients (x0, x1, x2, x3) with A = x0*I + x1*pi1 + x2*pi2 + x3*pi3.
std::array<double, 4> pauli_coefficients(const RealMatrix& a);

// Eigenvalues of the self-adjoint representation, descending. Always real,
// unlike the eigenvalues of the interaction matrix itself.
std::vector<double> state_eigenvalues(const InteractionState& s);

// Diagonal activity matrix over X = 2^N with V_SS = v(S), subsets in
// binary-counter order.
InteractionState from_tu_game(const TUGame& v);

struct BisetEntry {
    subset_t s = 0;
    subset_t t = 0;
    double value = 0.0;
};

// Bicooperative game: V_ST = v(S,T) for disjoint coalition pairs, zero
// elsewhere. Throws if a pair is not disjoint.
InteractionState from_biset(int n, const std::vector<BisetEntry>& entries);

// 2-additive game: diagonal = singleton interactions, off-diagonal = pair
// interactions (symmetric input required).
InteractionState from_two_additive(const std::vector<double>& singleton,
                                   const RealMatrix& pair);

// Skew-symmetric transaction matrix (t_xy + t_yx = 0 enforced).
InteractionState transaction_state(const RealMatrix& t, double tol = 1e-12);

// Arbitrary influence matrix.
InteractionState influence_state(const RealMatrix& a);

} // namespace iqs
