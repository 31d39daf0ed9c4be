#pragma once

#include <array>
#include <optional>

#include "iqs/interaction.hpp"

namespace iqs {

// Two-agent influence system with activity levels w1, w2 in [0,1] and unit
// total row weight. Three couplings of the off-diagonal interaction:
//   conformist      A   = [[w1, 1-w1], [1-w2, w2]]
//   anticonformist  A'  = [[w1, w1-1], [w2-1, w2]]
//   mixed           A'' = [[w1, 1-w1], [w2-1, w2]]
// All three share the same self-adjoint off-diagonal modulus, hence the same
// eigenvalues, level splitting and transition amplitude; only the phase angle
// differs.
enum class TwoAgentKind { conformist, anticonformist, mixed };

struct TwoAgentModel {
    double w1 = 0.0;
    double w2 = 0.0;
    double hbar = 1.0;
    TwoAgentKind kind = TwoAgentKind::conformist;

    // derived parameters of the spectral change of variables
    double w_sum = 0.0;    // W = w1 + w2
    double w_diff = 0.0;   // dW = w1 - w2
    double e0 = 0.0;       // mean level W / 2
    double gap = 0.0;      // half level splitting: lambda = e0 +/- gap
    double theta = 0.0;    // mixing angle in [0, pi], sin(theta) >= 0
    double phi = 0.0;      // coupling phase in (-pi, pi], zero when undefined
    bool degenerate = false; // gap == 0 (w1 = w2 = 1): no oscillation, no period

    double lambda1() const { return e0 + gap; }
    double lambda2() const { return e0 - gap; }
};

TwoAgentModel two_agent(double w1, double w2, double hbar = 1.0);
TwoAgentModel two_agent_variant(double w1, double w2, TwoAgentKind kind, double hbar = 1.0);

// The interaction matrix realizing the model (A, A' or A'' above).
RealMatrix interaction_matrix(const TwoAgentModel& m);

// Closed-form Hamiltonian evolution of psi(0) = e1:
// psi(t) = e^{-i e0 t / hbar} (cos(gap t/hbar) - i cos(theta) sin(gap t/hbar),
//                              -i e^{i phi} sin(theta) sin(gap t/hbar)).
std::array<cplx, 2> psi(const TwoAgentModel& m, double t);

// |<e2|psi(t)>|^2 = sin^2(theta) sin^2(gap t / hbar).
double transition_probability(const TwoAgentModel& m, double t);

// Peak transition probability sin^2(theta).
double max_amplitude(const TwoAgentModel& m);

// pi hbar / gap; empty in the degenerate gap = 0 case.
std::optional<double> period(const TwoAgentModel& m);

const char* kind_name(TwoAgentKind kind);

} // namespace iqs
