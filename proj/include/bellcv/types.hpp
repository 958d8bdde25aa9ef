#pragma once

#include <cmath>

#include "bellcv/errors.hpp"

namespace bellcv {

// Unit conventions used throughout: lengths in mm, wavenumbers in 1/mm,
// angles in rad. The single exception is the wavelength, which configs carry
// in nm because that is how optical sources are quoted.
struct OpticalConfig {
    double wavelength_nm = 650.0;

    // Per-photon wavenumber k = 2*pi/lambda.
    double wavenumber_per_mm() const { return 2.0 * M_PI / (wavelength_nm * 1e-6); }

    void validate() const {
        if (!(wavelength_nm > 0.0) || !std::isfinite(wavelength_nm))
            throw ConfigError("wavelength_nm must be positive and finite");
    }
};

// Orthonormal Hermite-Gaussian basis phi_n(x; sigma0). sigma0 is the position
// standard deviation of the ground mode |phi_0|^2, so
//   phi_n(x) = (2 pi sigma0^2)^(-1/4) (2^n n!)^(-1/2) H_n(x/(sigma0 sqrt(2)))
//              * exp(-x^2/(4 sigma0^2)).
struct HermiteBasisSpec {
    double sigma0_mm = 1.0;
    int n_max = 0;

    int size() const { return n_max + 1; }

    void validate() const {
        if (!(sigma0_mm > 0.0) || !std::isfinite(sigma0_mm))
            throw ConfigError("sigma0_mm must be positive and finite");
        if (n_max < 0) throw ConfigError("n_max must be >= 0");
    }
};

// Absolute-error accounting for probabilities and CHSH values. The total
// claim abs_tol is split between the certified state-truncation budget and
// everything quadrature/recurrence-shaped.
struct ErrorBudget {
    double abs_tol = 1e-8;
    double quadrature_tol = 1e-9;
    double truncation_tol = 5e-9;

    void validate() const {
        if (!(abs_tol > 0.0 && quadrature_tol > 0.0 && truncation_tol > 0.0))
            throw ConfigError("all tolerances must be > 0");
        if (quadrature_tol + truncation_tol > abs_tol)
            throw ConfigError("quadrature_tol + truncation_tol must not exceed abs_tol");
    }

    // Largest admissible truncated-tail mass eps such that the worst-case
    // CHSH perturbation 4*(2*sqrt(eps) + 2*eps) stays within truncation_tol.
    double required_tail_mass() const {
        const double r = truncation_tol / 9.0;
        return r * r;
    }
};

} // namespace bellcv
