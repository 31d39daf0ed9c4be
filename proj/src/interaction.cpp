#include "iqs/interaction.hpp"

#include <cmath>
#include <utility>

#include "iqs/errors.hpp"
#include "iqs/spectral.hpp"

namespace iqs {

TUGame TUGame::unanimity(int n, subset_t t) {
    std::vector<double> vals(std::size_t{1} << n, 0.0);
    for (subset_t s = 0; s < vals.size(); ++s)
        if (is_subset_of(t, s)) vals[s] = 1.0;
    return TUGame(n, std::move(vals));
}

TUGame TUGame::additive(const std::vector<double>& c) {
    const int n = static_cast<int>(c.size());
    std::vector<double> vals(std::size_t{1} << n, 0.0);
    for (subset_t s = 0; s < vals.size(); ++s) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            if (s & (subset_t{1} << j)) acc += c[j];
        vals[s] = acc;
    }
    return TUGame(n, std::move(vals));
}

InteractionState InteractionState::from_matrix(RealMatrix a, std::vector<std::string> labels) {
    if (labels.empty()) {
        labels.reserve(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(std::to_string(i + 1));
    }
    if (labels.size() != a.dim())
        throw PreconditionError("InteractionState: agent label count does not match matrix dim");
    auto [sym, skw] = symmetry_split(a);
    ComplexMatrix herm(sym, skw);
    return InteractionState{std::move(labels), std::move(a), std::move(sym), std::move(skw),
                            std::move(herm)};
}

std::pair<RealMatrix, RealMatrix> symmetry_split(const RealMatrix& a) {
    const std::size_t n = a.dim();
    RealMatrix sym(n), skw(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            sym(i, j) = 0.5 * (a(i, j) + a(j, i));
            skw(i, j) = 0.5 * (a(i, j) - a(j, i));
        }
    }
    return {std::move(sym), std::move(skw)};
}

ComplexMatrix hermitian_repr(const RealMatrix& a) {
    auto [sym, skw] = symmetry_split(a);
    return ComplexMatrix(sym, skw);
}

RealMatrix from_hermitian(const ComplexMatrix& h, double tol) {
    const double defect = h.hermiticity_defect();
    if (!(defect <= tol))
        throw PreconditionError("from_hermitian: input is not self-adjoint: ||H - H*||_F = " +
                                std::to_string(defect));
    return h.real_part() + h.imag_part();
}

std::array<RealMatrix, 4> pauli_basis() {
    RealMatrix id = RealMatrix::identity(2);
    RealMatrix p1(2, {1, 0, 0, -1});
    RealMatrix p2(2, {0, 1, 1, 0});
    RealMatrix p3(2, {0, -1, 1, 0});
    return {id, p1, p2, p3};
}

std::array<double, 4> pauli_coefficients(const RealMatrix& m) {
    if (m.dim() != 2) throw PreconditionError("pauli_coefficients: matrix must be 2x2");
    const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    return {(a + d) / 2, (a - d) / 2, (b + c) / 2, (c - b) / 2};
}

std::vector<double> state_eigenvalues(const InteractionState& s) {
    return eigh(s.hermitian).eigenvalues;
}

InteractionState from_tu_game(const TUGame& v) {
    const std::size_t dim = v.size();
    RealMatrix m(dim);
    std::vector<std::string> labels(dim);
    for (subset_t s = 0; s < dim; ++s) {
        m(s, s) = v.value(s);
        labels[s] = subset_label(s, v.n);
    }
    return InteractionState::from_matrix(std::move(m), std::move(labels));
}

InteractionState from_biset(int n, const std::vector<BisetEntry>& entries) {
    const std::size_t dim = std::size_t{1} << n;
    RealMatrix m(dim);
    std::vector<std::string> labels(dim);
    for (subset_t s = 0; s < dim; ++s) labels[s] = subset_label(s, n);
    for (const auto& e : entries) {
        if (e.s >= dim || e.t >= dim)
            throw PreconditionError("from_biset: coalition index out of range");
        if ((e.s & e.t) != 0)
            throw PreconditionError("from_biset: coalitions " + subset_label(e.s, n) + " and " +
                                    subset_label(e.t, n) + " are not disjoint");
        m(e.s, e.t) = e.value;
    }
    return InteractionState::from_matrix(std::move(m), std::move(labels));
}

InteractionState from_two_additive(const std::vector<double>& singleton,
                                   const RealMatrix& pair) {
    const std::size_t n = singleton.size();
    if (pair.dim() != n)
        throw PreconditionError("from_two_additive: pair matrix dim does not match player count");
    if (!pair.is_symmetric(1e-12 * std::max(1.0, pair.max_abs())))
        throw PreconditionError("from_two_additive: pair interaction input must be symmetric");
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = singleton[i];
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m(i, j) = pair(i, j);
    }
    return InteractionState::from_matrix(std::move(m));
}

InteractionState transaction_state(const RealMatrix& t, double tol) {
    if (!t.is_skew(tol * std::max(1.0, t.max_abs())))
        throw PreconditionError("transaction_state: matrix is not skew-symmetric "
                                "(t_xy + t_yx must vanish)");
    return InteractionState::from_matrix(t);
}

InteractionState influence_state(const RealMatrix& a) {
    return InteractionState::from_matrix(a);
}

} // namespace iqs
