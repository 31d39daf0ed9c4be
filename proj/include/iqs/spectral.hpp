#pragma once

#include <functional>
#include <vector>

#include "iqs/complex_matrix.hpp"

namespace iqs {

// Eigendecomposition of a self-adjoint matrix: real eigenvalues in descending
// order, unit eigenvector columns forming a unitary matrix.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;

    // sum_x lambda_x U_x U_x*
    ComplexMatrix reconstruct() const;
    // U f(Lambda) U* for a scalar function of the eigenvalues
    ComplexMatrix map_eigenvalues(const std::function<cplx(double)>& f) const;
};

inline constexpr double kDefaultHermitianTol = 1e-9;

// Diagonalizes a self-adjoint matrix by cyclic complex Jacobi rotations.
// Throws PreconditionError (naming ||H - H*||_F) if the input is not
// self-adjoint within tol. Eigenvalues are sorted descending; each
// eigenvector's largest-modulus component is rotated real nonnegative so the
// output is deterministic up to eigenvalue degeneracy.
SpectralDecomposition eigh(const ComplexMatrix& h, double tol = kDefaultHermitianTol);

// uu* for a unit vector u: rank 1, trace 1, self-adjoint.
// Throws if | ||u|| - 1 | > tol.
ComplexMatrix pure_density(const std::vector<cplx>& u, double tol = kDefaultHermitianTol);

} // namespace iqs
