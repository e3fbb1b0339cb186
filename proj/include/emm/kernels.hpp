#ifndef EMM_KERNELS_HPP
#define EMM_KERNELS_HPP

#include <cstddef>

// Dense inner loops used by the inference hot path. Scalar reference
// implementations always exist; an AVX2+FMA variant is selected at runtime
// when the CPU supports it. The EMM_SIMD environment variable overrides the
// choice ("auto", "scalar", "avx2"). Scalar and SIMD variants are
// equivalence-tested against each other; they may differ by rounding only.

namespace emm::kernels {

struct Ops {
    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[i] += a * x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    double (*sum)(const double* a, std::size_t n);
    double (*max)(const double* a, std::size_t n);
    // out[i] = exp(a[i] - shift), returns sum of out. Inputs <= shift expected;
    // -inf maps to exactly 0.
    double (*exp_shift_sum)(const double* a, double shift, double* out, std::size_t n);
    // a[i] *= s
    void (*scale)(double* a, double s, std::size_t n);
    const char* name;
};

const Ops& scalar_ops();
const Ops& avx2_ops();      // falls back to scalar_ops() when not compiled in
bool avx2_compiled();
bool avx2_supported();      // CPU capability at runtime

// Backend picked once per process (cpuid + EMM_SIMD override).
const Ops& active();

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline double sum(const double* a, std::size_t n) { return active().sum(a, n); }
inline double max(const double* a, std::size_t n) { return active().max(a, n); }
inline double exp_shift_sum(const double* a, double shift, double* out, std::size_t n) {
    return active().exp_shift_sum(a, shift, out, n);
}
inline void scale(double* a, double s, std::size_t n) { active().scale(a, s, n); }

} // namespace emm::kernels

#endif
