#pragma once

#include "bellcv/matrix.hpp"
#include "bellcv/types.hpp"

namespace bellcv {

// Half-line Gram matrix of the orthonormal Hermite functions,
//   G_nm(alpha) = integral_{alpha}^{inf} h_n(u) h_m(u) du ,
// built by recurrence: off-diagonal entries from the oscillator Wronskian
// identity, diagonal entries by a compensated chain recurrence seeded with
// erfc. All dimensionful overlaps reduce to this via alpha = a/(sigma0*sqrt2).
double halfline_gram_entry(int n, int m, double alpha);
RealMat halfline_gram(int n_top, double alpha);

// Independent route for cross-checks: adaptive quadrature of h_n h_m.
double halfline_gram_quadrature(int n, int m, double alpha, double abs_tol);

// integral_a^inf phi_n phi_m dx in the given basis; symmetric in (n, m).
double halfline_overlap(const HermiteBasisSpec& spec, int n, int m, double a_mm);

struct OverlapMatrix {
    RealMat g;                // (n_max+1)^2, symmetric
    double alpha = 0.0;       // threshold in Hermite units
    double entry_error = 0.0; // certified per-entry bound from spot checks
};

// Full matrix with quadrature spot checks; throws NumericError if the
// recurrence and quadrature disagree beyond 1e-10 (instability guard).
OverlapMatrix overlap_matrix(const HermiteBasisSpec& spec, double a_mm);

} // namespace bellcv
