#include "iqs/two_agent.hpp"

#include <cmath>
#include <numbers>

#include "iqs/errors.hpp"

namespace iqs {

namespace {

// Off-diagonal entry of the self-adjoint representation for each coupling.
// Its modulus is shared by all three kinds; only the argument moves.
cplx hermitian_offdiag(double w1, double w2, TwoAgentKind kind) {
    const double w_sum = w1 + w2;
    const double w_diff = w1 - w2;
    switch (kind) {
        case TwoAgentKind::conformist:
            return {1.0 - 0.5 * w_sum, -0.5 * w_diff};
        case TwoAgentKind::anticonformist:
            return {0.5 * w_sum - 1.0, 0.5 * w_diff};
        case TwoAgentKind::mixed:
            return {-0.5 * w_diff, 1.0 - 0.5 * w_sum};
    }
    throw PreconditionError("two_agent: unknown kind");
}

} // namespace

TwoAgentModel two_agent(double w1, double w2, double hbar) {
    return two_agent_variant(w1, w2, TwoAgentKind::conformist, hbar);
}

TwoAgentModel two_agent_variant(double w1, double w2, TwoAgentKind kind, double hbar) {
    if (w1 < 0.0 || w1 > 1.0 || w2 < 0.0 || w2 > 1.0)
        throw PreconditionError("two_agent: activity levels must lie in [0,1]");
    if (hbar <= 0.0) throw PreconditionError("two_agent: hbar must be positive");

    TwoAgentModel m;
    m.w1 = w1;
    m.w2 = w2;
    m.hbar = hbar;
    m.kind = kind;
    m.w_sum = w1 + w2;
    m.w_diff = w1 - w2;
    m.e0 = 0.5 * m.w_sum;

    const cplx c = hermitian_offdiag(w1, w2, kind);
    const double ac = std::abs(c);
    m.gap = std::sqrt(0.25 * m.w_diff * m.w_diff + ac * ac);
    m.degenerate = m.gap == 0.0;

    // tan(theta) = 2|c| / dW resolved with sin(theta) >= 0
    m.theta = std::atan2(2.0 * ac, m.w_diff);

    // e^{-i phi} = c / |c|; undefined (set to 0) when the coupling vanishes
    if (ac > 0.0) {
        m.phi = -std::arg(c);
        if (m.phi <= -std::numbers::pi) m.phi += 2.0 * std::numbers::pi;
    } else {
        m.phi = 0.0;
    }
    return m;
}

RealMatrix interaction_matrix(const TwoAgentModel& m) {
    switch (m.kind) {
        case TwoAgentKind::conformist:
            return RealMatrix(2, {m.w1, 1.0 - m.w1, 1.0 - m.w2, m.w2});
        case TwoAgentKind::anticonformist:
            return RealMatrix(2, {m.w1, m.w1 - 1.0, m.w2 - 1.0, m.w2});
        case TwoAgentKind::mixed:
            return RealMatrix(2, {m.w1, 1.0 - m.w1, m.w2 - 1.0, m.w2});
    }
    throw PreconditionError("two_agent: unknown kind");
}

std::array<cplx, 2> psi(const TwoAgentModel& m, double t) {
    const double x = m.gap * t / m.hbar;
    const cplx global = std::polar(1.0, -m.e0 * t / m.hbar);
    const cplx first(std::cos(x), -std::cos(m.theta) * std::sin(x));
    const cplx second = cplx(0.0, -1.0) * std::polar(1.0, m.phi) * std::sin(m.theta) *
                        std::sin(x);
    return {global * first, global * second};
}

double transition_probability(const TwoAgentModel& m, double t) {
    const double s = std::sin(m.theta) * std::sin(m.gap * t / m.hbar);
    return s * s;
}

double max_amplitude(const TwoAgentModel& m) {
    const double s = std::sin(m.theta);
    return s * s;
}

std::optional<double> period(const TwoAgentModel& m) {
    if (m.degenerate) return std::nullopt;
    return std::numbers::pi * m.hbar / m.gap;
}

const char* kind_name(TwoAgentKind kind) {
    switch (kind) {
        case TwoAgentKind::conformist: return "conformist";
        case TwoAgentKind::anticonformist: return "anticonformist";
        case TwoAgentKind::mixed: return "mixed";
    }
    return "?";
}

} // namespace iqs
