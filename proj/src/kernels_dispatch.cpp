#include <cstdlib>
#include <cstring>
#include <mutex>

#include "bellcv/kernels.hpp"

namespace bellcv::kernels {

#ifdef BELLCV_HAVE_AVX2_TU
const Ops& avx2_ops(); // defined in kernels_avx2.cpp
#endif

namespace {

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops* resolve() {
    const char* force = std::getenv("BELLCV_KERNELS");
    if (force != nullptr) {
        if (std::strcmp(force, "scalar") == 0) return &scalar_ops();
#ifdef BELLCV_HAVE_AVX2_TU
        if (std::strcmp(force, "avx2") == 0 && cpu_has_avx2_fma()) return &avx2_ops();
#endif
    }
#ifdef BELLCV_HAVE_AVX2_TU
    if (cpu_has_avx2_fma()) return &avx2_ops();
#endif
    return &scalar_ops();
}

} // namespace

const Ops& active_ops() {
    static const Ops* chosen = resolve();
    return *chosen;
}

std::vector<const Ops*> available_ops() {
    std::vector<const Ops*> v{&scalar_ops()};
#ifdef BELLCV_HAVE_AVX2_TU
    if (cpu_has_avx2_fma()) v.push_back(&avx2_ops());
#endif
    return v;
}

} // namespace bellcv::kernels
