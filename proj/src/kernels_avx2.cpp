#include "liar/kernels.hpp"

#include <immintrin.h>

namespace liar::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

} // namespace

void cmatvec(std::span<const double> a_re, std::span<const double> a_im, std::size_t rows, std::size_t cols,
             std::span<const double> x_re, std::span<const double> x_im, std::span<double> y_re,
             std::span<double> y_im) {
    const std::size_t body = cols & ~std::size_t{3};
    for (std::size_t r = 0; r < rows; ++r) {
        const double* ar = a_re.data() + r * cols;
        const double* ai = a_im.data() + r * cols;
        __m256d acc_re = _mm256_setzero_pd();
        __m256d acc_im = _mm256_setzero_pd();
        for (std::size_t c = 0; c < body; c += 4) {
            const __m256d vr = _mm256_loadu_pd(ar + c);
            const __m256d vi = _mm256_loadu_pd(ai + c);
            const __m256d xr = _mm256_loadu_pd(x_re.data() + c);
            const __m256d xi = _mm256_loadu_pd(x_im.data() + c);
            acc_re = _mm256_fmadd_pd(vr, xr, acc_re);
            acc_re = _mm256_fnmadd_pd(vi, xi, acc_re);
            acc_im = _mm256_fmadd_pd(vr, xi, acc_im);
            acc_im = _mm256_fmadd_pd(vi, xr, acc_im);
        }
        double sum_re = hsum(acc_re);
        double sum_im = hsum(acc_im);
        for (std::size_t c = body; c < cols; ++c) {
            sum_re += ar[c] * x_re[c] - ai[c] * x_im[c];
            sum_im += ar[c] * x_im[c] + ai[c] * x_re[c];
        }
        y_re[r] = sum_re;
        y_im[r] = sum_im;
    }
}

void cmul(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> y_re,
          std::span<const double> y_im, std::span<double> out_re, std::span<double> out_im) {
    const std::size_t n = x_re.size();
    const std::size_t body = n & ~std::size_t{3};
    for (std::size_t k = 0; k < body; k += 4) {
        const __m256d xr = _mm256_loadu_pd(x_re.data() + k);
        const __m256d xi = _mm256_loadu_pd(x_im.data() + k);
        const __m256d yr = _mm256_loadu_pd(y_re.data() + k);
        const __m256d yi = _mm256_loadu_pd(y_im.data() + k);
        const __m256d re = _mm256_fmsub_pd(xr, yr, _mm256_mul_pd(xi, yi));
        const __m256d im = _mm256_fmadd_pd(xr, yi, _mm256_mul_pd(xi, yr));
        _mm256_storeu_pd(out_re.data() + k, re);
        _mm256_storeu_pd(out_im.data() + k, im);
    }
    for (std::size_t k = body; k < n; ++k) {
        const double re = x_re[k] * y_re[k] - x_im[k] * y_im[k];
        const double im = x_re[k] * y_im[k] + x_im[k] * y_re[k];
        out_re[k] = re;
        out_im[k] = im;
    }
}

void abs2(std::span<const double> x_re, std::span<const double> x_im, std::span<double> out) {
    const std::size_t n = x_re.size();
    const std::size_t body = n & ~std::size_t{3};
    for (std::size_t k = 0; k < body; k += 4) {
        const __m256d xr = _mm256_loadu_pd(x_re.data() + k);
        const __m256d xi = _mm256_loadu_pd(x_im.data() + k);
        _mm256_storeu_pd(out.data() + k, _mm256_fmadd_pd(xr, xr, _mm256_mul_pd(xi, xi)));
    }
    for (std::size_t k = body; k < n; ++k) {
        out[k] = x_re[k] * x_re[k] + x_im[k] * x_im[k];
    }
}

} // namespace liar::kernels::avx2
