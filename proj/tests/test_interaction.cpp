#include <doctest.h>

#include <cmath>

#include "iqs/errors.hpp"
#include "iqs/interaction.hpp"
#include "oracles.hpp"

using namespace iqs;

TEST_CASE("symmetry split") {
    const RealMatrix a(2, {0, 1, 0, 0});
    auto [sym, skw] = symmetry_split(a);
    CHECK(sym(0, 1) == 0.5);
    CHECK(sym(1, 0) == 0.5);
    CHECK(skw(0, 1) == 0.5);
    CHECK(skw(1, 0) == -0.5);
    CHECK((sym + skw - a).frobenius_norm() == 0.0);

    const RealMatrix s(2, {1, 2, 2, 5});
    auto [s2, k2] = symmetry_split(s);
    CHECK((s2 - s).frobenius_norm() == 0.0);
    CHECK(k2.frobenius_norm() == 0.0);

    // two-agent influence matrix: off-diagonals 1 - W/2 and -+ dW/2
    const double w1 = 0.7, w2 = 0.2;
    const RealMatrix inf(2, {w1, 1 - w1, 1 - w2, w2});
    auto [is, ik] = symmetry_split(inf);
    CHECK(is(0, 1) == doctest::Approx(1 - (w1 + w2) / 2).epsilon(1e-15));
    CHECK(ik(0, 1) == doctest::Approx(-(w1 - w2) / 2).epsilon(1e-15));
    CHECK(ik(1, 0) == doctest::Approx((w1 - w2) / 2).epsilon(1e-15));
}

TEST_CASE("hermitian representation") {
    const RealMatrix skew(2, {0, -1, 1, 0});
    const ComplexMatrix h = hermitian_repr(skew);
    CHECK(h(0, 1) == cplx(0, -1));
    CHECK(h(1, 0) == cplx(0, 1));

    const RealMatrix sym(2, {2, 3, 3, -1});
    CHECK((hermitian_repr(sym) - ComplexMatrix(sym)).frobenius_norm() == 0.0);

    const double w1 = 0.9, w2 = 0.4;
    const RealMatrix inf(2, {w1, 1 - w1, 1 - w2, w2});
    const ComplexMatrix ih = hermitian_repr(inf);
    CHECK(ih(0, 1).real() == doctest::Approx(1 - (w1 + w2) / 2).epsilon(1e-15));
    CHECK(ih(0, 1).imag() == doctest::Approx(-(w1 - w2) / 2).epsilon(1e-15));
    CHECK(ih.hermiticity_defect() == 0.0);
}

TEST_CASE("from_hermitian inverts the representation") {
    CHECK((from_hermitian(ComplexMatrix::identity(3)) - RealMatrix::identity(3))
              .frobenius_norm() == 0.0);

    const ComplexMatrix p3h(2, {cplx(0, 0), cplx(0, -1), cplx(0, 1), cplx(0, 0)});
    const RealMatrix back = from_hermitian(p3h);
    CHECK(back(0, 1) == -1.0);
    CHECK(back(1, 0) == 1.0);

    for (int rep = 0; rep < 10; ++rep) {
        const auto a = oracle::random_real_matrix(6);
        const auto round = from_hermitian(hermitian_repr(a));
        CHECK((round - a).frobenius_norm() < 1e-14);
        // and the other direction, starting from a self-adjoint matrix
        const auto h = oracle::random_hermitian(5);
        CHECK((hermitian_repr(from_hermitian(h)) - h).frobenius_norm() < 1e-14);
    }

    CHECK_THROWS_AS(from_hermitian(ComplexMatrix(2, {0, 1, 0, 0})), PreconditionError);
}

TEST_CASE("isometry and pythagoras") {
    for (std::size_t dim : {2ul, 4ul, 8ul}) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto a = oracle::random_real_matrix(dim);
            const auto h = hermitian_repr(a);
            CHECK(std::abs(h.frobenius_norm() - a.frobenius_norm()) < 1e-12);
            auto [sym, skw] = symmetry_split(a);
            const double na = a.frobenius_norm(), ns = sym.frobenius_norm(),
                         nk = skw.frobenius_norm();
            CHECK(std::abs(na * na - ns * ns - nk * nk) < 1e-12);
        }
    }
}

TEST_CASE("symmetric and skew matrices are orthogonal") {
    for (std::size_t dim : {2ul, 5ul, 8ul}) {
        for (int rep = 0; rep < 10; ++rep) {
            const RealMatrix c = symmetry_split(oracle::random_real_matrix(dim)).first;
            const RealMatrix b = symmetry_split(oracle::random_real_matrix(dim)).second;
            CHECK(std::abs(frobenius_inner(c, b)) < 1e-13);
        }
    }
}

TEST_CASE("pauli basis") {
    auto basis = pauli_basis();
    CHECK(basis[1](0, 0) == 1.0);
    CHECK(basis[1](1, 1) == -1.0);
    CHECK(basis[2](0, 1) == 1.0);

    // pi3^2 = -I: pi3 behaves as an imaginary unit
    const RealMatrix p3 = basis[3];
    RealMatrix sq(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) sq(i, j) += p3(i, k) * p3(k, j);
    CHECK((sq + RealMatrix::identity(2)).frobenius_norm() == 0.0);

    for (int rep = 0; rep < 10; ++rep) {
        const auto a = oracle::random_real_matrix(2);
        const auto c = pauli_coefficients(a);
        RealMatrix recon = c[0] * basis[0] + c[1] * basis[1];
        recon = recon + c[2] * basis[2] + c[3] * basis[3];
        CHECK((recon - a).frobenius_norm() < 1e-14);
        // the expansion is the unique solution of the 4x4 system
        CHECK(c[0] == doctest::Approx((a(0, 0) + a(1, 1)) / 2));
        CHECK(c[1] == doctest::Approx((a(0, 0) - a(1, 1)) / 2));
        CHECK(c[2] == doctest::Approx((a(0, 1) + a(1, 0)) / 2));
        CHECK(c[3] == doctest::Approx((a(1, 0) - a(0, 1)) / 2));
    }
}

TEST_CASE("the span of I and pi3 multiplies like complex numbers") {
    auto basis = pauli_basis();
    for (int rep = 0; rep < 10; ++rep) {
        const double a = oracle::uniform(), b = oracle::uniform();
        const double c = oracle::uniform(), d = oracle::uniform();
        const RealMatrix left = a * basis[0] + b * basis[3];
        const RealMatrix right = c * basis[0] + d * basis[3];
        RealMatrix prod(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) prod(i, j) += left(i, k) * right(k, j);
        const RealMatrix expect = (a * c - b * d) * basis[0] + (a * d + b * c) * basis[3];
        CHECK((prod - expect).frobenius_norm() < 1e-14);
    }
}

TEST_CASE("state eigenvalues") {
    const auto flip = InteractionState::from_matrix(RealMatrix(2, {0, 1, 1, 0}));
    const auto ev = state_eigenvalues(flip);
    CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(-1.0).epsilon(1e-12));

    const auto id = InteractionState::from_matrix(RealMatrix::identity(2));
    CHECK(state_eigenvalues(id)[0] == doctest::Approx(1.0));
    CHECK(state_eigenvalues(id)[1] == doctest::Approx(1.0));

    const auto two = InteractionState::from_matrix(RealMatrix(2, {1, 0, 1, 0}));
    const auto ev2 = state_eigenvalues(two);
    CHECK(ev2[0] == doctest::Approx((1 + std::sqrt(3.0)) / 2).epsilon(1e-12));
    CHECK(ev2[1] == doctest::Approx((1 - std::sqrt(3.0)) / 2).epsilon(1e-12));
}

TEST_CASE("game and biset constructors") {
    // single player: diag(v({})), v({1})) = diag(0, 5)
    const TUGame v1(1, {0, 5});
    const auto s1 = from_tu_game(v1);
    CHECK(s1.dim() == 2);
    CHECK(s1.matrix(0, 0) == 0.0);
    CHECK(s1.matrix(1, 1) == 5.0);
    CHECK(s1.matrix(0, 1) == 0.0);
    CHECK(s1.agents[0] == "{}");
    CHECK(s1.agents[1] == "{1}");

    const TUGame v2(2, {0, 1, 0, 2});
    const auto s2 = from_tu_game(v2);
    CHECK(s2.dim() == 4);
    for (subset_t s = 0; s < 4; ++s) CHECK(s2.matrix(s, s) == v2.value(s));

    const auto bs = from_biset(2, {{1, 2, 3.5}, {2, 0, -1.0}});
    CHECK(bs.matrix(1, 2) == 3.5);
    CHECK(bs.matrix(2, 0) == -1.0);
    CHECK_THROWS_AS(from_biset(2, {{1, 3, 1.0}}), PreconditionError);
}

TEST_CASE("two-additive constructor") {
    RealMatrix pair(3);
    pair(0, 1) = pair(1, 0) = 0.5;
    pair(0, 2) = pair(2, 0) = -0.25;
    pair(1, 2) = pair(2, 1) = 1.0;
    const auto s = from_two_additive({1.0, 2.0, 3.0}, pair);
    CHECK(s.matrix(0, 0) == 1.0);
    CHECK(s.matrix(1, 1) == 2.0);
    CHECK(s.matrix(2, 2) == 3.0);
    CHECK(s.matrix(0, 1) == 0.5);
    CHECK(s.matrix(1, 0) == 0.5);
    CHECK(s.matrix.is_symmetric(0.0));

    RealMatrix asym(3);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(from_two_additive({0, 0, 0}, asym), PreconditionError);
}

TEST_CASE("transaction and influence constructors") {
    CHECK_NOTHROW(transaction_state(RealMatrix(2, {0, 3, -3, 0})));
    CHECK_THROWS_AS(transaction_state(RealMatrix(2, {0, 3, 3, 0})), PreconditionError);
    const auto inf = influence_state(RealMatrix(2, {0.3, 0.7, -0.1, 0.9}));
    CHECK(inf.matrix(0, 1) == 0.7);
}
