#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace liar {

/// Small dense row-major complex matrix; only used on 2m x 2m subspace operators.
class ComplexMatrix {
public:
    using value_type = std::complex<double>;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    std::complex<double> trace() const;

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

/// Entrywise max |a - b| (the infinity-norm residual used by the spectral checks).
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace liar
