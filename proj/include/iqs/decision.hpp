#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iqs/complex_matrix.hpp"
#include "iqs/tu_game.hpp"

namespace iqs {

// Joint state of n decision makers with k alternatives each: a complex
// coefficient per outcome tuple, k^n in total. Outcome tuples are indexed
// little-endian (maker 1 = least significant digit); for k = 2 the index is
// the coalition bitmask of subset.hpp.
//
// Proper states are unit vectors; squared moduli are outcome probabilities.
// Valuation states (a TU-game read as a coefficient vector) skip the norm
// constraint and are flagged as such.
struct DecisionState {
    int n = 0;
    int k = 2;
    std::vector<cplx> coeffs;
    bool proper = true;

    std::size_t size() const { return coeffs.size(); }
    double norm() const;

    static DecisionState proper_state(int n, int k, std::vector<cplx> coeffs,
                                      double tol = 1e-10);
    static DecisionState valuation(int n, std::vector<cplx> coeffs); // k = 2
    static DecisionState basis(int n, int k, std::size_t index);
};

// Single binary decision maker. With normalize unset the pair must already
// be unit length.
DecisionState qubit(cplx c0, cplx c1, bool normalize = false);

// Coefficientwise product state: (a x b)[p + k^(a.n) * s] = a[p] * b[s].
// The combined norm is the product of the factor norms.
DecisionState tensor(const DecisionState& a, const DecisionState& b);

// |coeff|^2 / ||state||^2 per outcome. Defined for any nonzero state.
std::vector<double> outcome_probabilities(const DecisionState& s);

// Rank-one density of a proper state (delegates to pure_density).
ComplexMatrix density(const DecisionState& s);

// Tensor-factorization test at the prefix split m (first m makers vs the
// rest): the prefix-by-suffix coefficient matrix is rank 1 exactly when the
// state is a product. sigma are its two largest singular values; when
// reducible the recovered unit factors are returned (unique up to phase).
struct Factorization {
    bool reducible = false;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
    std::optional<std::pair<DecisionState, DecisionState>> factors;
};

Factorization is_reducible(const DecisionState& s, int m, double tol = 1e-8);

// Independent-participation state: each maker j accepts with probability
// w[j], so coalition S forms with probability prod_{j in S} w_j *
// prod_{j not in S} (1 - w_j). Amplitudes are the nonnegative square roots.
DecisionState fuzzy_state(const std::vector<double>& w);

// General k-alternative proper state.
DecisionState multichoice_state(int n, int k, std::vector<cplx> coeffs, double tol = 1e-10);

// The coefficient vector sum_S v(S)|S> of a TU-game, as a (non-proper)
// valuation state.
DecisionState valuation_state(const TUGame& v);

} // namespace iqs
