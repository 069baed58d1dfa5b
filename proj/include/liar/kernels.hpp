#pragma once

// Dense split-complex arithmetic used on the 2m-dimensional evolution subspace.
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2/FMA
// variant; `active()` picks one at runtime from CPUID (override with the
// LIARSIM_SIMD environment variable: "scalar" or "avx2").

#include <cstddef>
#include <span>
#include <string_view>

namespace liar::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// Complex matrix (row-major, split real/imaginary planes) times a complex vector.
using CMatVecFn = void (*)(std::span<const double> a_re, std::span<const double> a_im, std::size_t rows,
                           std::size_t cols, std::span<const double> x_re, std::span<const double> x_im,
                           std::span<double> y_re, std::span<double> y_im);
/// Elementwise complex product out = x * y; out may alias either input.
using CMulFn = void (*)(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> y_re,
                        std::span<const double> y_im, std::span<double> out_re, std::span<double> out_im);
/// out = |x|^2
using Abs2Fn = void (*)(std::span<const double> x_re, std::span<const double> x_im, std::span<double> out);

struct KernelTable {
    Isa isa;
    CMatVecFn cmatvec;
    CMulFn cmul;
    Abs2Fn abs2;
};

bool isa_supported(Isa isa);

/// Table for a specific ISA; nullptr when the host (or build) lacks it.
const KernelTable* table_for(Isa isa);

/// Best supported table, selected once per process.
const KernelTable& active();

namespace scalar {
void cmatvec(std::span<const double> a_re, std::span<const double> a_im, std::size_t rows, std::size_t cols,
             std::span<const double> x_re, std::span<const double> x_im, std::span<double> y_re,
             std::span<double> y_im);
void cmul(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> y_re,
          std::span<const double> y_im, std::span<double> out_re, std::span<double> out_im);
void abs2(std::span<const double> x_re, std::span<const double> x_im, std::span<double> out);
} // namespace scalar

#if defined(LIARSIM_HAVE_AVX2)
namespace avx2 {
void cmatvec(std::span<const double> a_re, std::span<const double> a_im, std::size_t rows, std::size_t cols,
             std::span<const double> x_re, std::span<const double> x_im, std::span<double> y_re,
             std::span<double> y_im);
void cmul(std::span<const double> x_re, std::span<const double> x_im, std::span<const double> y_re,
          std::span<const double> y_im, std::span<double> out_re, std::span<double> out_im);
void abs2(std::span<const double> x_re, std::span<const double> x_im, std::span<double> out);
} // namespace avx2
#endif

} // namespace liar::kernels
