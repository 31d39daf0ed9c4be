#include "iqs/games.hpp"

#include <cmath>
#include <stdexcept>

#include "iqs/errors.hpp"
#include "iqs/interaction.hpp"
#include "iqs/measurement.hpp"

namespace iqs {

std::vector<std::vector<double>> default_pd_payoffs() {
    // outcome index: 0 = both cooperate, 1 = only player 1 defects,
    // 2 = only player 2 defects, 3 = both defect
    return {{3, 5, 0, 1}, {3, 0, 5, 1}};
}

namespace {

// little-endian kron: out[(i1 + 2*i2), (j1 + 2*j2)] = a(i1,j1) * b(i2,j2),
// so `a` acts on maker 1 and `b` on maker 2
ComplexMatrix kron2(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(4);
    for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t i1 = 0; i1 < 2; ++i1)
            for (std::size_t j2 = 0; j2 < 2; ++j2)
                for (std::size_t j1 = 0; j1 < 2; ++j1)
                    out(i1 + 2 * i2, j1 + 2 * j2) = a(i1, j1) * b(i2, j2);
    return out;
}

void require_unitary(const ComplexMatrix& u, const char* what) {
    const double defect = u.unitarity_defect();
    if (defect > 1e-10)
        throw PreconditionError(std::string(what) + ": operator is not unitary, ||U*U - I|| = " +
                                std::to_string(defect));
}

} // namespace

ComplexMatrix entangling_initializer() {
    auto basis = pauli_basis();
    const ComplexMatrix p2(basis[2]);
    const ComplexMatrix k = kron2(p2, p2);
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix j = cplx(s) * ComplexMatrix::identity(4) + cplx(0.0, s) * k;
    return j;
}

ComplexMatrix named_strategy(const std::string& name) {
    auto basis = pauli_basis();
    if (name == "I" || name == "identity") return ComplexMatrix(basis[0]);
    if (name == "pauli1") return ComplexMatrix(basis[1]);
    if (name == "pauli2") return ComplexMatrix(basis[2]);
    if (name == "pauli3") return ComplexMatrix(basis[3]);
    if (name == "hadamard") {
        const double s = 1.0 / std::sqrt(2.0);
        return ComplexMatrix(2, {s, s, s, -s});
    }
    throw SchemaError("unknown strategy name: " + name);
}

StrategySet strategy_set(const std::vector<std::string>& names) {
    StrategySet s;
    for (const auto& n : names) {
        s.names.push_back(n);
        s.ops.push_back(named_strategy(n));
    }
    return s;
}

DecisionGame make_eisert_game(ComplexMatrix initializer,
                              std::vector<std::vector<double>> payoffs,
                              StrategySet player1, StrategySet player2) {
    if (payoffs.size() != 2) throw PreconditionError("eisert game: need payoffs for two players");
    for (const auto& p : payoffs)
        if (p.size() != 4)
            throw PreconditionError("eisert game: payoff vectors must cover the 4 outcomes");
    require_unitary(initializer, "eisert game initializer");
    for (const auto& set : {player1, player2})
        for (const auto& op : set.ops) require_unitary(op, "strategy");
    DecisionGame g;
    g.makers = 2;
    g.payoffs = std::move(payoffs);
    g.initializer = std::move(initializer);
    g.strategies = {std::move(player1), std::move(player2)};
    return g;
}

double expected_payoff(const DecisionGame& g, int player, const DecisionState& s) {
    if (player < 0 || player >= static_cast<int>(g.payoffs.size()))
        throw PreconditionError("expected_payoff: player index out of range");
    const auto& p = g.payoffs[player];
    if (s.size() != p.size())
        throw PreconditionError("expected_payoff: state size does not match payoff vector");
    double direct = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) direct += p[k] * std::norm(s.coeffs[k]);
    // same value as the diagonal measurement applied to the density
    const double via_density = measure(as_measurement(p), density(s));
    if (std::abs(direct - via_density) > 1e-10 * std::max(1.0, std::abs(direct)))
        throw std::logic_error("expected_payoff: measurement cross-check failed");
    return direct;
}

DecisionState eisert_play(const DecisionGame& g, const ComplexMatrix& a,
                          const ComplexMatrix& b) {
    if (g.makers != 2) throw PreconditionError("eisert_play: protocol is two-maker");
    if (a.dim() != 2 || b.dim() != 2)
        throw PreconditionError("eisert_play: strategies must be 2x2");
    require_unitary(a, "strategy A");
    require_unitary(b, "strategy B");
    std::vector<cplx> state(4, 0.0);
    state[0] = 1.0;
    state = g.initializer.apply(state);
    state = kron2(a, b).apply(state);
    state = g.initializer.adjoint().apply(state);
    return DecisionState::proper_state(2, 2, std::move(state));
}

PayoffTable payoff_table(const DecisionGame& g) {
    if (g.strategies.size() != 2) throw PreconditionError("payoff_table: need two strategy sets");
    PayoffTable t;
    t.row_names = g.strategies[0].names;
    t.col_names = g.strategies[1].names;
    t.payoff.assign(2, std::vector<std::vector<double>>(
                           t.rows(), std::vector<double>(t.cols(), 0.0)));
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            const DecisionState fin =
                eisert_play(g, g.strategies[0].ops[i], g.strategies[1].ops[j]);
            t.payoff[0][i][j] = expected_payoff(g, 0, fin);
            t.payoff[1][i][j] = expected_payoff(g, 1, fin);
        }
    }
    return t;
}

std::vector<std::pair<std::size_t, std::size_t>> nash_equilibria(const PayoffTable& t,
                                                                 double eps) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            bool ok = true;
            for (std::size_t i2 = 0; i2 < t.rows() && ok; ++i2)
                if (t.payoff[0][i2][j] > t.payoff[0][i][j] + eps) ok = false;
            for (std::size_t j2 = 0; j2 < t.cols() && ok; ++j2)
                if (t.payoff[1][i][j2] > t.payoff[1][i][j] + eps) ok = false;
            if (ok) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pareto_front(const PayoffTable& t,
                                                              double eps) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            bool dominated = false;
            for (std::size_t i2 = 0; i2 < t.rows() && !dominated; ++i2) {
                for (std::size_t j2 = 0; j2 < t.cols() && !dominated; ++j2) {
                    const double d0 = t.payoff[0][i2][j2] - t.payoff[0][i][j];
                    const double d1 = t.payoff[1][i2][j2] - t.payoff[1][i][j];
                    if (d0 >= -eps && d1 >= -eps && (d0 > eps || d1 > eps)) dominated = true;
                }
            }
            if (!dominated) out.emplace_back(i, j);
        }
    }
    return out;
}

} // namespace iqs
