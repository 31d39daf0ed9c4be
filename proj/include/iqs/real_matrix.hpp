#pragma once

#include <cstddef>
#include <vector>

namespace iqs {

// Dense square real matrix, row-major.
class RealMatrix {
  public:
    RealMatrix() = default;
    explicit RealMatrix(std::size_t dim, double fill = 0.0)
        : dim_(dim), data_(dim * dim, fill) {}
    RealMatrix(std::size_t dim, std::vector<double> entries);

    static RealMatrix identity(std::size_t dim);
    static RealMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return dim_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<double>& data() const { return data_; }

    RealMatrix transpose() const;
    double frobenius_norm() const;
    double max_abs() const;

    friend RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
    friend RealMatrix operator*(double s, const RealMatrix& a);

    std::vector<double> apply(const std::vector<double>& x) const;

    bool is_symmetric(double tol) const;
    bool is_skew(double tol) const;

  private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

} // namespace iqs
