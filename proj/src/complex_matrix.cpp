#include "iqs/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "iqs/errors.hpp"
#include "iqs/kern.hpp"

namespace iqs {

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim)
        throw PreconditionError("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(data_.size()));
}

ComplexMatrix::ComplexMatrix(const RealMatrix& re) : ComplexMatrix(re.dim()) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = re.data()[i];
}

ComplexMatrix::ComplexMatrix(const RealMatrix& re, const RealMatrix& im)
    : ComplexMatrix(re.dim()) {
    if (re.dim() != im.dim())
        throw PreconditionError("ComplexMatrix: real/imag dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] = {re.data()[i], im.data()[i]};
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix a(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) a(j, i) = std::conj((*this)(i, j));
    return a;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix c(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = std::conj(data_[i]);
    return c;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kern::dotc(data_.data(), data_.data(), data_.size()).real());
}

RealMatrix ComplexMatrix::real_part() const {
    RealMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j).real();
    return r;
}

RealMatrix ComplexMatrix::imag_part() const {
    RealMatrix r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j).imag();
    return r;
}

std::vector<cplx> ComplexMatrix::column(std::size_t j) const {
    std::vector<cplx> c(dim_);
    for (std::size_t i = 0; i < dim_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<cplx> ComplexMatrix::apply(const std::vector<cplx>& x) const {
    if (x.size() != dim_) throw PreconditionError("ComplexMatrix apply: dimension mismatch");
    std::vector<cplx> y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) y[i] = kern::dotu(&data_[i * dim_], x.data(), dim_);
    return y;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("ComplexMatrix +: dimension mismatch");
    ComplexMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("ComplexMatrix -: dimension mismatch");
    ComplexMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    for (cplx& x : c.data_) x *= s;
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("ComplexMatrix *: dimension mismatch");
    const std::size_t n = a.dim_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            kern::axpy(a(i, k), &b.data_[k * n], &c.data_[i * n], n);
    return c;
}

double ComplexMatrix::hermiticity_defect() const {
    double s = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
    return std::sqrt(s);
}

double ComplexMatrix::unitarity_defect() const {
    return (adjoint() * (*this) - identity(dim_)).frobenius_norm();
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw PreconditionError("frobenius_inner: dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    return kern::dotc(a.data().data(), b.data().data(), a.data().size());
}

double frobenius_inner(const RealMatrix& a, const RealMatrix& b) {
    if (a.dim() != b.dim())
        throw PreconditionError("frobenius_inner: dimension mismatch (" +
                                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
    return kern::dot(a.data().data(), b.data().data(), a.data().size());
}

ComplexMatrix adjoint(const ComplexMatrix& a) { return a.adjoint(); }

} // namespace iqs
