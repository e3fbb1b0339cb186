#include "emm/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "emm/log.hpp"

namespace emm::kernels {

#if !defined(EMM_HAVE_AVX2)
const Ops& avx2_ops() { return scalar_ops(); }
bool avx2_compiled() { return false; }
#endif

bool avx2_supported() {
#if defined(EMM_HAVE_AVX2) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Ops& pick() {
    const char* env = std::getenv("EMM_SIMD");
    if (env) {
        if (std::strcmp(env, "scalar") == 0) return scalar_ops();
        if (std::strcmp(env, "avx2") == 0) {
            if (avx2_compiled() && avx2_supported()) return avx2_ops();
            log::warn() << "EMM_SIMD=avx2 requested but unavailable, using scalar";
            return scalar_ops();
        }
        if (std::strcmp(env, "auto") != 0)
            log::warn() << "unknown EMM_SIMD value '" << env << "', using auto";
    }
    return (avx2_compiled() && avx2_supported()) ? avx2_ops() : scalar_ops();
}

} // namespace

const Ops& active() {
    static const Ops& ops = pick();
    return ops;
}

} // namespace emm::kernels
