#include "liar/kernels.hpp"

#include <cstdlib>
#include <string>

namespace liar::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::cmatvec, &scalar::cmul, &scalar::abs2};
#if defined(LIARSIM_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::cmatvec, &avx2::cmul, &avx2::abs2};
#endif

const KernelTable& select() {
    if (const char* forced = std::getenv("LIARSIM_SIMD")) {
        const std::string name(forced);
        if (name == "scalar") {
            return kScalar;
        }
        if (name == "avx2" && isa_supported(Isa::Avx2)) {
            return *table_for(Isa::Avx2);
        }
    }
    if (const KernelTable* t = table_for(Isa::Avx2)) {
        return *t;
    }
    return kScalar;
}

} // namespace

std::string_view to_string(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(LIARSIM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* table_for(Isa isa) {
    if (!isa_supported(isa)) {
        return nullptr;
    }
    switch (isa) {
        case Isa::Scalar: return &kScalar;
        case Isa::Avx2:
#if defined(LIARSIM_HAVE_AVX2)
            return &kAvx2;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable& active() {
    static const KernelTable& table = select();
    return table;
}

} // namespace liar::kernels
