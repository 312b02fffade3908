#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "coeffgap/kernels.hpp"

namespace coeffgap::kernels {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

namespace {

const Backend& select_backend() {
    const char* forced = std::getenv("COEFFGAP_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_backend();
    if (forced != nullptr && std::strcmp(forced, "avx2") == 0) {
        const Backend* avx2 = avx2_backend();
        if (avx2 == nullptr || !cpu_has_avx2())
            throw std::runtime_error("COEFFGAP_SIMD=avx2 but AVX2 is unavailable");
        return *avx2;
    }
    const Backend* avx2 = avx2_backend();
    if (avx2 != nullptr && cpu_has_avx2()) return *avx2;
    return scalar_backend();
}

}  // namespace

const Backend& active_backend() {
    static const Backend& backend = select_backend();
    return backend;
}

}  // namespace coeffgap::kernels
