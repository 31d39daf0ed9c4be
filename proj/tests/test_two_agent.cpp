#include <doctest.h>

#include <cmath>
#include <numbers>

#include "iqs/errors.hpp"
#include "iqs/evolution.hpp"
#include "iqs/two_agent.hpp"
#include "oracles.hpp"

using namespace iqs;

namespace {

constexpr double pi = std::numbers::pi;

// amplitude and eigenvalues straight from the printed closed forms
double amplitude_formula(double w1, double w2) {
    const double w = w1 + w2, dw = w1 - w2;
    return 1.0 - dw * dw / (4.0 + w * w - 4.0 * w + 2.0 * dw * dw);
}

std::array<double, 2> eigen_formula(double w1, double w2) {
    const double w = w1 + w2, dw = w1 - w2;
    const double disc = std::sqrt((w - 2.0) * (w - 2.0) + 2.0 * dw * dw);
    return {(w + disc) / 2.0, (w - disc) / 2.0};
}

} // namespace

TEST_CASE("pure interaction extreme: flip coupling") {
    const auto m = two_agent(0.0, 0.0);
    CHECK(m.lambda1() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.lambda2() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(m.theta == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(m.gap == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_amplitude(m) == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(period(m).has_value());
    CHECK(*period(m) == doctest::Approx(pi).epsilon(1e-14));
    // e^{-i phi} = 1
    CHECK(std::abs(std::polar(1.0, -m.phi) - cplx(1.0, 0.0)) < 1e-14);

    // evolution (cos(t), -i sin(t))
    for (double t : {0.0, 0.4, 1.1, 2.9}) {
        const auto v = psi(m, t);
        CHECK(std::abs(v[0] - cplx(std::cos(t), 0.0)) < 1e-12);
        CHECK(std::abs(v[1] - cplx(0.0, -std::sin(t))) < 1e-12);
    }
}

TEST_CASE("anticonformist extreme: negative coupling") {
    const auto m = two_agent_variant(0.0, 0.0, TwoAgentKind::anticonformist);
    const auto a = interaction_matrix(m);
    CHECK(a(0, 1) == -1.0);
    CHECK(a(1, 0) == -1.0);
    CHECK(m.lambda1() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.lambda2() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(m.theta == doctest::Approx(pi / 2).epsilon(1e-14));
    CHECK(m.gap == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_amplitude(m) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*period(m) == doctest::Approx(pi).epsilon(1e-14));
    // e^{-i phi} = -1, evolution (cos(t), +i sin(t))
    CHECK(std::abs(std::polar(1.0, -m.phi) - cplx(-1.0, 0.0)) < 1e-14);
    for (double t : {0.3, 1.7}) {
        const auto v = psi(m, t);
        CHECK(std::abs(v[0] - cplx(std::cos(t), 0.0)) < 1e-12);
        CHECK(std::abs(v[1] - cplx(0.0, std::sin(t))) < 1e-12);
    }
}

TEST_CASE("oscillation attains the extremes at half and full period") {
    for (auto kind : {TwoAgentKind::conformist, TwoAgentKind::anticonformist}) {
        const auto m = two_agent_variant(0.0, 0.0, kind);
        CHECK(transition_probability(m, pi / 2.0) == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(transition_probability(m, pi) == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("asymmetric activity levels") {
    const auto m = two_agent(1.0, 0.0);
    const double root3 = std::sqrt(3.0);
    CHECK(m.lambda1() == doctest::Approx((1 + root3) / 2).epsilon(1e-14));
    CHECK(m.lambda2() == doctest::Approx((1 - root3) / 2).epsilon(1e-14));
    CHECK(max_amplitude(m) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(*period(m) == doctest::Approx(pi / std::sqrt(0.75)).epsilon(1e-12));
}

TEST_CASE("equal activity levels give full amplitude") {
    for (double w : {0.0, 0.25, 0.6, 0.99}) {
        const auto m = two_agent(w, w);
        CHECK(max_amplitude(m) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.gap == doctest::Approx(std::abs(1.0 - w)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate point w1 = w2 = 1") {
    const auto m = two_agent(1.0, 1.0);
    CHECK(m.degenerate);
    CHECK_FALSE(period(m).has_value());
    CHECK(max_amplitude(m) == 0.0);
    for (double t : {0.0, 1.0, 5.0})
        CHECK(transition_probability(m, t) == 0.0);
}

TEST_CASE("model eigenvalues match eigh across the grid") {
    for (int i = 0; i <= 10; ++i) {
        for (int j = 0; j <= 10; ++j) {
            const double w1 = i / 10.0, w2 = j / 10.0;
            const auto m = two_agent(w1, w2);
            const auto ev = state_eigenvalues(
                InteractionState::from_matrix(interaction_matrix(m)));
            CHECK(std::abs(ev[0] - m.lambda1()) < 1e-9);
            CHECK(std::abs(ev[1] - m.lambda2()) < 1e-9);
            const auto formula = eigen_formula(w1, w2);
            CHECK(std::abs(ev[0] - formula[0]) < 1e-9);
            CHECK(std::abs(ev[1] - formula[1]) < 1e-9);
            if (!m.degenerate)
                CHECK(std::abs(max_amplitude(m) - amplitude_formula(w1, w2)) < 1e-12);
        }
    }
}

TEST_CASE("spectral parameters are shared across the three couplings") {
    const auto kinds = {TwoAgentKind::conformist, TwoAgentKind::anticonformist,
                        TwoAgentKind::mixed};
    const auto base = two_agent_variant(0.4, 0.7, TwoAgentKind::conformist);
    for (auto kind : kinds) {
        const auto m = two_agent_variant(0.4, 0.7, kind);
        CHECK(std::abs(m.e0 - base.e0) < 1e-10);
        CHECK(std::abs(m.gap - base.gap) < 1e-10);
        CHECK(std::abs(m.theta - base.theta) < 1e-10);
    }
    // the phases differ pairwise at this activity pair
    const auto c = two_agent_variant(0.4, 0.7, TwoAgentKind::conformist);
    const auto a = two_agent_variant(0.4, 0.7, TwoAgentKind::anticonformist);
    const auto x = two_agent_variant(0.4, 0.7, TwoAgentKind::mixed);
    CHECK(std::abs(c.phi - a.phi) > 1e-6);
    CHECK(std::abs(c.phi - x.phi) > 1e-6);

    const auto mixed00 = two_agent_variant(0.0, 0.0, TwoAgentKind::mixed);
    CHECK(mixed00.lambda1() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mixed00.lambda2() == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("the model off-diagonal equals the hermitian representation") {
    for (auto kind : {TwoAgentKind::conformist, TwoAgentKind::anticonformist,
                      TwoAgentKind::mixed}) {
        const auto m = two_agent_variant(0.35, 0.8, kind);
        const auto h = hermitian_repr(interaction_matrix(m));
        // gap and theta recomputed from the actual matrix
        const double ac = std::abs(h(0, 1));
        CHECK(std::abs(m.gap - std::sqrt(0.25 * m.w_diff * m.w_diff + ac * ac)) < 1e-14);
        CHECK(std::abs(m.theta - std::atan2(2.0 * ac, m.w_diff)) < 1e-14);
        if (ac > 0.0)
            CHECK(std::abs(std::polar(1.0, -m.phi) - h(0, 1) / ac) < 1e-13);
    }
}

TEST_CASE("closed form agrees with the propagated schrodinger evolution") {
    for (auto [w1, w2] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.3, 0.85}, {0.5, 0.5}}) {
        for (auto kind : {TwoAgentKind::conformist, TwoAgentKind::anticonformist,
                          TwoAgentKind::mixed}) {
            const auto m = two_agent_variant(w1, w2, kind);
            const auto h = hermitian_repr(interaction_matrix(m));
            const auto spec = eigh(h);
            const double horizon = period(m) ? 3.0 * *period(m) : 3.0 * pi;
            double max_err = 0.0, max_prob_err = 0.0;
            for (int i = 0; i < 1000; ++i) {
                const double t = horizon * i / 999.0;
                const auto u = schrodinger_propagator(spec, t, m.hbar);
                const auto prop = u.apply({1.0, 0.0});
                const auto closed = psi(m, t);
                max_err = std::max(max_err, std::abs(prop[0] - closed[0]));
                max_err = std::max(max_err, std::abs(prop[1] - closed[1]));
                max_prob_err = std::max(
                    max_prob_err, std::abs(std::norm(prop[1]) - transition_probability(m, t)));
            }
            CHECK(max_err < 1e-9);
            CHECK(max_prob_err < 1e-9);
        }
    }
}

TEST_CASE("change-of-variable displays hold verbatim") {
    for (auto [w1, w2] : {std::pair{0.9, 0.2}, {0.1, 0.6}, {1.0, 0.0}}) {
        const auto m = two_agent(w1, w2);
        const double w = w1 + w2, dw = w1 - w2;
        const double root = std::sqrt(1.0 + 0.25 * w * w - w + 0.25 * dw * dw);
        CHECK(std::tan(m.theta) == doctest::Approx(2.0 * root / dw).epsilon(1e-12));
        const cplx expected_phase = cplx(1.0 - 0.5 * w, -0.5 * dw) / root;
        CHECK(std::abs(std::polar(1.0, -m.phi) - expected_phase) < 1e-13);
        CHECK(m.e0 == doctest::Approx(0.5 * w).epsilon(1e-15));
        CHECK(m.gap ==
              doctest::Approx(std::sqrt(0.5 * dw * dw + 1.0 + 0.25 * w * w - w)).epsilon(1e-13));
    }
}

TEST_CASE("norm is preserved along the closed-form evolution") {
    const auto m = two_agent(0.2, 0.9);
    for (double t : {0.0, 0.7, 2.5, 9.0}) {
        const auto v = psi(m, t);
        CHECK(std::abs(std::sqrt(std::norm(v[0]) + std::norm(v[1])) - 1.0) < 1e-12);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(two_agent(-0.1, 0.5), PreconditionError);
    CHECK_THROWS_AS(two_agent(0.1, 1.5), PreconditionError);
    CHECK_THROWS_AS(two_agent(0.1, 0.5, 0.0), PreconditionError);
}
