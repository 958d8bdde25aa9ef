// AVX2+FMA kernel variants. This TU is the only one compiled with -mavx2; it
// is reached solely through the dispatch table after a cpuid check.

#include <immintrin.h>

#include "bellcv/kernels.hpp"

namespace bellcv::kernels {
namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d s0 = _mm256_setzero_pd();
    __m256d s1 = _mm256_setzero_pd();
    __m256d s2 = _mm256_setzero_pd();
    __m256d s3 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
        s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), s1);
        s2 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 8), _mm256_loadu_pd(b + i + 8), s2);
        s3 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 12), _mm256_loadu_pd(b + i + 12), s3);
    }
    for (; i + 4 <= n; i += 4)
        s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
    double s = hsum(_mm256_add_pd(_mm256_add_pd(s0, s1), _mm256_add_pd(s2, s3)));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void dot2_avx2(const double* a1, const double* a2, const double* b, std::size_t n,
               double* out1, double* out2) {
    __m256d p0 = _mm256_setzero_pd();
    __m256d p1 = _mm256_setzero_pd();
    __m256d q0 = _mm256_setzero_pd();
    __m256d q1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d bv0 = _mm256_loadu_pd(b + i);
        const __m256d bv1 = _mm256_loadu_pd(b + i + 4);
        p0 = _mm256_fmadd_pd(_mm256_loadu_pd(a1 + i), bv0, p0);
        p1 = _mm256_fmadd_pd(_mm256_loadu_pd(a1 + i + 4), bv1, p1);
        q0 = _mm256_fmadd_pd(_mm256_loadu_pd(a2 + i), bv0, q0);
        q1 = _mm256_fmadd_pd(_mm256_loadu_pd(a2 + i + 4), bv1, q1);
    }
    double p = hsum(_mm256_add_pd(p0, p1));
    double q = hsum(_mm256_add_pd(q0, q1));
    for (; i < n; ++i) {
        p += a1[i] * b[i];
        q += a2[i] * b[i];
    }
    *out1 = p;
    *out2 = q;
}

void vmul_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
        _mm256_storeu_pd(dst + i + 4,
                         _mm256_mul_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4)));
    }
    for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void vmla_avx2(double* dst, const double* a, const double* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d d0 = _mm256_loadu_pd(dst + i);
        __m256d d1 = _mm256_loadu_pd(dst + i + 4);
        d0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), d0);
        d1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), d1);
        _mm256_storeu_pd(dst + i, d0);
        _mm256_storeu_pd(dst + i + 4, d1);
    }
    for (; i < n; ++i) dst[i] += a[i] * b[i];
}

const Ops k_avx2{"avx2", dot_avx2, dot2_avx2, vmul_avx2, vmla_avx2};

} // namespace

const Ops& avx2_ops();
const Ops& avx2_ops() { return k_avx2; }

} // namespace bellcv::kernels
