#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iqs/decision.hpp"

namespace iqs {

// A named finite set of 2x2 unitary strategy operators for one player.
struct StrategySet {
    std::vector<std::string> names;
    std::vector<ComplexMatrix> ops;

    std::size_t size() const { return ops.size(); }
};

// Two-player game played on a system of m binary decision makers: an
// initializing unitary U prepares U|0...0>, the players act locally, U* is
// applied, and each player j is rewarded payoffs[j][k] when outcome k is
// accepted.
struct DecisionGame {
    int makers = 2;
    std::vector<std::vector<double>> payoffs; // per player, length 2^makers
    ComplexMatrix initializer;                // U, dim 2^makers
    std::vector<StrategySet> strategies;      // per player
};

// Canonical Prisoners' Dilemma payoff vectors over outcomes indexed
// little-endian (0 = cooperate): (CC) -> (3,3), (DC) -> (5,0), (CD) -> (0,5),
// (DD) -> (1,1).
std::vector<std::vector<double>> default_pd_payoffs();

// The maximally entangling initializer J = (I + i * pi2 x pi2) / sqrt(2).
ComplexMatrix entangling_initializer();

// Named 2x2 strategy operators: "I", "pauli1", "pauli2", "pauli3", "hadamard".
ComplexMatrix named_strategy(const std::string& name);
StrategySet strategy_set(const std::vector<std::string>& names);

// Builds a two-player game; payoffs/initializer defaults reproduce the
// classical PD under U = I and the entangled variant under J.
DecisionGame make_eisert_game(ComplexMatrix initializer,
                              std::vector<std::vector<double>> payoffs,
                              StrategySet player1, StrategySet player2);

// sum_k payoffs[j][k] |delta_k|^2, cross-checked against the equivalent
// diagonal measurement <P|delta delta*>.
double expected_payoff(const DecisionGame& g, int player, const DecisionState& s);

// Final state U* (A x B) U |00> (player 1's operator acts on maker 1, the
// low index digit). Strategies must be unitary 2x2.
DecisionState eisert_play(const DecisionGame& g, const ComplexMatrix& a,
                          const ComplexMatrix& b);

struct PayoffTable {
    std::vector<std::string> row_names; // player 1 strategies
    std::vector<std::string> col_names; // player 2 strategies
    // payoff[player][row][col]
    std::vector<std::vector<std::vector<double>>> payoff;

    std::size_t rows() const { return row_names.size(); }
    std::size_t cols() const { return col_names.size(); }
};

PayoffTable payoff_table(const DecisionGame& g);

// Pure-strategy equilibria by exhaustive best-response scan: a profile is an
// equilibrium when no unilateral deviation improves a payoff by more than eps.
std::vector<std::pair<std::size_t, std::size_t>> nash_equilibria(const PayoffTable& t,
                                                                 double eps = 1e-9);

// Profiles not strictly dominated in both coordinates.
std::vector<std::pair<std::size_t, std::size_t>> pareto_front(const PayoffTable& t,
                                                              double eps = 1e-9);

} // namespace iqs
