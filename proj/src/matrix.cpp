#include "liar/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace liar {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out(k, k) = 1.0;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

std::complex<double> ComplexMatrix::trace() const {
    std::complex<double> sum;
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        sum += (*this)(k, k);
    }
    return sum;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    ComplexMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto lhs = a(r, k);
            if (lhs == 0.0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols_; ++c) {
                out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::invalid_argument("matrix shape mismatch");
    }
    ComplexMatrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) {
        out.data_[k] -= b.data_[k];
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    const ComplexMatrix d = a - b;
    double worst = 0.0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
        for (std::size_t c = 0; c < d.cols(); ++c) {
            worst = std::max(worst, std::abs(d(r, c)));
        }
    }
    return worst;
}

} // namespace liar
