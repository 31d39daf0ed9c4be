#include "iqs/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "iqs/errors.hpp"
#include "iqs/kern.hpp"

namespace iqs {

RealMatrix::RealMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim)
        throw PreconditionError("RealMatrix: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(data_.size()));
}

RealMatrix RealMatrix::identity(std::size_t dim) {
    RealMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::diagonal(const std::vector<double>& d) {
    RealMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double RealMatrix::frobenius_norm() const {
    return std::sqrt(kern::dot(data_.data(), data_.data(), data_.size()));
}

double RealMatrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::abs(x));
    return m;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("RealMatrix +: dimension mismatch");
    RealMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    if (a.dim_ != b.dim_) throw PreconditionError("RealMatrix -: dimension mismatch");
    RealMatrix c(a.dim_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

RealMatrix operator*(double s, const RealMatrix& a) {
    RealMatrix c = a;
    for (double& x : c.data_) x *= s;
    return c;
}

std::vector<double> RealMatrix::apply(const std::vector<double>& x) const {
    if (x.size() != dim_) throw PreconditionError("RealMatrix apply: dimension mismatch");
    std::vector<double> y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) y[i] = kern::dot(&data_[i * dim_], x.data(), dim_);
    return y;
}

bool RealMatrix::is_symmetric(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
    return true;
}

bool RealMatrix::is_skew(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) + (*this)(j, i)) > tol) return false;
    return true;
}

} // namespace iqs
