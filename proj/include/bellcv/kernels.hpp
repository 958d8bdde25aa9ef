#pragma once

#include <cstddef>
#include <vector>

namespace bellcv::kernels {

// The three inner loops everything hot reduces to:
//   dot   : sum_i a[i]*b[i]
//   dot2  : two dots sharing the b stream (complex row against a real row)
//   vmul  : dst[i]  = a[i]*b[i]
//   vmla  : dst[i] += a[i]*b[i]
// Implementations must use a fixed summation order for a given (impl, n) so
// results are bit-reproducible across runs on the same machine.
struct Ops {
    const char* name;
    double (*dot)(const double* a, const double* b, std::size_t n);
    void (*dot2)(const double* a1, const double* a2, const double* b, std::size_t n,
                 double* out1, double* out2);
    void (*vmul)(double* dst, const double* a, const double* b, std::size_t n);
    void (*vmla)(double* dst, const double* a, const double* b, std::size_t n);
};

// Portable reference implementation (always available).
const Ops& scalar_ops();

// Best implementation for this CPU, resolved once at first use. The
// environment variable BELLCV_KERNELS=scalar|avx2 forces a specific one
// (useful for equivalence testing); unknown or unsupported values fall back
// to the automatic choice.
const Ops& active_ops();

// Every implementation compiled in and runnable on this CPU.
std::vector<const Ops*> available_ops();

} // namespace bellcv::kernels
