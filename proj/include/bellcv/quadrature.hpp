#pragma once

#include <functional>
#include <vector>

namespace bellcv {

// Gauss-Hermite rule of order n. `weights` are the classical ones for
// integrals of the form  integral exp(-u^2) p(u) du;  `lifted` are
// w_i * exp(x_i^2), for integrands that already carry Gaussian decay (Hermite
// function products): integral f(u) du ~= sum lifted_i f(x_i), exact for
// f = h_a h_b with a + b <= 2n - 1.
struct GaussHermiteRule {
    std::vector<double> nodes;   // ascending
    std::vector<double> weights; // classical (may underflow for huge n; unused then)
    std::vector<double> lifted;
};

GaussHermiteRule gauss_hermite(int n);

struct QuadResult {
    double value = 0.0;
    double error_bound = 0.0;
};

// Globally adaptive Gauss-Kronrod (G7/K15) on [a, b] to absolute tolerance.
// Throws BudgetError when the tolerance is unreachable within max_intervals.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_intervals = 4000);

// Convenience for decaying integrands on [a, +inf): integrates [a, cutoff]
// adaptively after checking the integrand is negligible at the cutoff.
QuadResult integrate_decaying_tail(const std::function<double(double)>& f, double a,
                                   double cutoff, double abs_tol, int max_intervals = 4000);

} // namespace bellcv
