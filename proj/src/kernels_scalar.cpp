#include "bellcv/kernels.hpp"

namespace bellcv::kernels {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    // Four independent accumulators; same associativity the SIMD variants use
    // up to lane width, and enough ILP that gcc keeps the loop pipelined.
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    double s = (s0 + s1) + (s2 + s3);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void dot2_scalar(const double* a1, const double* a2, const double* b, std::size_t n,
                 double* out1, double* out2) {
    double p0 = 0.0, p1 = 0.0, q0 = 0.0, q1 = 0.0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        p0 += a1[i] * b[i];
        p1 += a1[i + 1] * b[i + 1];
        q0 += a2[i] * b[i];
        q1 += a2[i + 1] * b[i + 1];
    }
    double p = p0 + p1, q = q0 + q1;
    for (; i < n; ++i) {
        p += a1[i] * b[i];
        q += a2[i] * b[i];
    }
    *out1 = p;
    *out2 = q;
}

void vmul_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void vmla_scalar(double* dst, const double* a, const double* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] += a[i] * b[i];
}

const Ops k_scalar{"scalar", dot_scalar, dot2_scalar, vmul_scalar, vmla_scalar};

} // namespace

const Ops& scalar_ops() { return k_scalar; }

} // namespace bellcv::kernels
