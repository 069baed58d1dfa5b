#include "liar/kernels.hpp"

namespace liar::kernels::scalar {

void cmatvec(std::span<const double> a_re, std::span<const double> a_im, std::size_t rows, std::size_t cols,
             std::span<const double> x_re, std::span<const double> x_im, std::span<double> y_re,
             std::span<double> y_im) {
    for (std::size_t r = 0; r < rows; ++r) {
        const double* ar = a_re.data() + r * cols;
        const double* ai = a_im.data() + r * cols;
        double acc_re = 0.0;
        double acc_im = 0.0;
        for (std::size_t c = 0; c < cols; ++c) {
            acc_re += ar[c] * x_re[c] - ai[c] * x_im[c];
            acc_im += ar[c] * x_im[c] + ai[c] * x_re[c];
        }
        y_re[r] = acc_re;
        y_im[r] = acc_im;
    }
}

void cmul(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> y_re,
          std::span<const double> y_im, std::span<double> out_re, std::span<double> out_im) {
    for (std::size_t k = 0; k < x_re.size(); ++k) {
        const double re = x_re[k] * y_re[k] - x_im[k] * y_im[k];
        const double im = x_re[k] * y_im[k] + x_im[k] * y_re[k];
        out_re[k] = re;
        out_im[k] = im;
    }
}

void abs2(std::span<const double> x_re, std::span<const double> x_im, std::span<double> out) {
    for (std::size_t k = 0; k < x_re.size(); ++k) {
        out[k] = x_re[k] * x_re[k] + x_im[k] * x_im[k];
    }
}

} // namespace liar::kernels::scalar
