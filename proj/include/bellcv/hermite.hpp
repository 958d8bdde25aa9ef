#pragma once

#include <vector>

#include "bellcv/types.hpp"

namespace bellcv {

// Physicists' Hermite polynomial H_n(u) by the three-term recurrence.
// Throws NumericError if an intermediate overflows to non-finite; for large n
// prefer the normalized Hermite functions below, which never overflow.
double hermite_eval(int n, double u);

// Orthonormal Hermite functions h_n(u) = pi^(-1/4) (2^n n!)^(-1/2) H_n(u)
// exp(-u^2/2), filled for n = 0..n_top inclusive. These satisfy
// integral h_n h_m du = delta_nm and stay O(1) for all n, u.
void hermite_fn_values(double u, int n_top, std::vector<double>& out);
void hermite_fn_values_ld(long double u, int n_top, std::vector<long double>& out);

// Derivative h_n'(u) from neighbours: sqrt(n/2) h_{n-1} - sqrt((n+1)/2) h_{n+1}.
inline long double hermite_fn_derivative_ld(int n, const std::vector<long double>& h) {
    long double d = -sqrtl((n + 1) / 2.0L) * h[n + 1];
    if (n > 0) d += sqrtl(n / 2.0L) * h[n - 1];
    return d;
}

// Orthonormal Hermite-Gaussian mode phi_n(x; sigma0); see HermiteBasisSpec.
double mode_eval(const HermiteBasisSpec& spec, int n, double x_mm);

// All modes 0..spec.n_max at one point; O(n_max) total.
void mode_values(const HermiteBasisSpec& spec, double x_mm, std::vector<double>& out);

} // namespace bellcv
