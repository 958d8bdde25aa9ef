#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bellcv {

// Minimal dense row-major matrix. Rows are contiguous so the SIMD kernels can
// stream them directly.
template <class T>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, T fill = T{}) : rows(r), cols(c), a(r * c, fill) {}

    T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    T* row(std::size_t i) { return a.data() + i * cols; }
    const T* row(std::size_t i) const { return a.data() + i * cols; }
};

using RealMat = Mat<double>;
using CplxMat = Mat<std::complex<double>>;

} // namespace bellcv
