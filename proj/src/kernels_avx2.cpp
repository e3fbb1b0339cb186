// AVX2 + FMA kernel variants. Compiled with -mavx2 -mfma; only dispatched
// when the CPU reports both (see kernels.cpp).

#include "emm/kernels.hpp"

#if defined(EMM_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace emm::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d vy = _mm256_loadu_pd(y + i);
        vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
        _mm256_storeu_pd(y + i, vy);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

double sum_avx2(const double* a, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i];
    return s;
}

double max_avx2(const double* a, std::size_t n) {
    double m = -std::numeric_limits<double>::infinity();
    std::size_t i = 0;
    if (n >= 4) {
        __m256d vm = _mm256_loadu_pd(a);
        for (i = 4; i + 4 <= n; i += 4) vm = _mm256_max_pd(vm, _mm256_loadu_pd(a + i));
        __m128d lo = _mm256_castpd256_pd128(vm);
        __m128d hi = _mm256_extractf128_pd(vm, 1);
        lo = _mm_max_pd(lo, hi);
        __m128d sh = _mm_unpackhi_pd(lo, lo);
        m = _mm_cvtsd_f64(_mm_max_sd(lo, sh));
    }
    for (; i < n; ++i)
        if (a[i] > m) m = a[i];
    return m;
}

// exp(x) for x <= ~0: 2^k * p(r), k = round(x/ln2), r = x - k*ln2 split
// Cody-Waite style. Degree-12 Taylor on |r| <= ln2/2; ~1e-16 relative.
// Inputs below -708 flush to exactly 0 (scalar path reaches denormals there;
// the equivalence tests use a combined tolerance for that band).
constexpr double kLog2e = 1.4426950408889634074;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kExpCut = -708.0;

const double kC[13] = {
    1.0,
    1.0,
    1.0 / 2,
    1.0 / 6,
    1.0 / 24,
    1.0 / 120,
    1.0 / 720,
    1.0 / 5040,
    1.0 / 40320,
    1.0 / 362880,
    1.0 / 3628800,
    1.0 / 39916800,
    1.0 / 479001600,
};

inline __m256d exp_vec(__m256d x) {
    const __m256d cut = _mm256_set1_pd(kExpCut);
    __m256d alive = _mm256_cmp_pd(x, cut, _CMP_GE_OQ);
    x = _mm256_max_pd(x, cut);  // keep scale math in range for dead lanes

    __m256d k = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2e)),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Hi), x);
    r = _mm256_fnmadd_pd(k, _mm256_set1_pd(kLn2Lo), r);

    __m256d p = _mm256_set1_pd(kC[12]);
    for (int i = 11; i >= 0; --i)
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kC[i]));

    // 2^k via exponent bits; k in [-1022, 1024] here
    __m128i k32 = _mm256_cvtpd_epi32(k);
    __m256i k64 = _mm256_cvtepi32_epi64(k32);
    __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(k64, _mm256_set1_epi64x(1023)), 52);
    __m256d scale = _mm256_castsi256_pd(bits);

    return _mm256_and_pd(_mm256_mul_pd(p, scale), alive);
}

inline double exp_one(double x) {
    if (x < kExpCut) return 0.0;
    double k = std::nearbyint(x * kLog2e);
    double r = x - k * kLn2Hi;
    r -= k * kLn2Lo;
    double p = kC[12];
    for (int i = 11; i >= 0; --i) p = p * r + kC[i];
    return std::ldexp(p, static_cast<int>(k));
}

double exp_shift_sum_avx2(const double* a, double shift, double* out, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(shift);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d e = exp_vec(_mm256_sub_pd(_mm256_loadu_pd(a + i), vs));
        _mm256_storeu_pd(out + i, e);
        acc = _mm256_add_pd(acc, e);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        out[i] = exp_one(a[i] - shift);
        s += out[i];
    }
    return s;
}

void scale_avx2(double* a, double s, std::size_t n) {
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(a + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), vs));
    for (; i < n; ++i) a[i] *= s;
}

} // namespace

const Ops& avx2_ops() {
    static const Ops ops = {dot_avx2, axpy_avx2,          sum_avx2,
                            max_avx2, exp_shift_sum_avx2, scale_avx2,
                            "avx2"};
    return ops;
}

bool avx2_compiled() { return true; }

} // namespace emm::kernels

#endif // EMM_HAVE_AVX2
