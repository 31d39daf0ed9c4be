#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "iqs/real_matrix.hpp"

namespace iqs {

using cplx = std::complex<double>;

// Dense square complex matrix, row-major. Carrier for interaction instances,
// self-adjoint representations and every operator in the library.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim, cplx fill = {})
        : dim_(dim), data_(dim * dim, fill) {}
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    explicit ComplexMatrix(const RealMatrix& re);
    ComplexMatrix(const RealMatrix& re, const RealMatrix& im);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    std::size_t dim() const { return dim_; }
    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conj() const;
    cplx trace() const;
    double frobenius_norm() const;
    RealMatrix real_part() const;
    RealMatrix imag_part() const;

    std::vector<cplx> column(std::size_t j) const;
    std::vector<cplx> apply(const std::vector<cplx>& x) const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    // ||C - C*||_F, zero exactly for self-adjoint matrices
    double hermiticity_defect() const;
    // ||U*U - I||_F
    double unitarity_defect() const;

  private:
    std::size_t dim_ = 0;
    std::vector<cplx> data_;
};

// tr(A* B) = sum conj(A_xy) B_xy; for real A, B this is the trace form
// tr(A^T B). Throws on dimension mismatch.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_inner(const RealMatrix& a, const RealMatrix& b);

// Entrywise conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

} // namespace iqs
