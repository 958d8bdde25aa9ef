#include "bellcv/hermite.hpp"

#include <cmath>

#include "bellcv/errors.hpp"

namespace bellcv {

double hermite_eval(int n, double u) {
    if (n < 0) throw ConfigError("hermite_eval: n must be >= 0");
    if (!std::isfinite(u)) throw ConfigError("hermite_eval: u must be finite");
    double hm1 = 0.0, h = 1.0; // H_{-1}, H_0
    for (int j = 0; j < n; ++j) {
        const double hp1 = 2.0 * u * h - 2.0 * j * hm1;
        hm1 = h;
        h = hp1;
        if (!std::isfinite(h))
            throw NumericError("hermite_eval: overflow at n=" + std::to_string(j + 1) +
                               ", u=" + std::to_string(u));
    }
    return h;
}

namespace {
constexpr double kQuarterRootPiInv = 0.7511255444649424828587030047762276930510; // pi^(-1/4)
}

void hermite_fn_values(double u, int n_top, std::vector<double>& out) {
    out.resize(static_cast<std::size_t>(n_top) + 1);
    double hm1 = 0.0;
    double h = kQuarterRootPiInv * std::exp(-0.5 * u * u);
    out[0] = h;
    for (int n = 0; n < n_top; ++n) {
        const double hp1 = u * std::sqrt(2.0 / (n + 1)) * h - std::sqrt(double(n) / (n + 1)) * hm1;
        hm1 = h;
        h = hp1;
        out[n + 1] = h;
    }
}

void hermite_fn_values_ld(long double u, int n_top, std::vector<long double>& out) {
    out.resize(static_cast<std::size_t>(n_top) + 1);
    long double hm1 = 0.0L;
    long double h = (long double)kQuarterRootPiInv * expl(-0.5L * u * u);
    out[0] = h;
    for (int n = 0; n < n_top; ++n) {
        const long double hp1 =
            u * sqrtl(2.0L / (n + 1)) * h - sqrtl((long double)n / (n + 1)) * hm1;
        hm1 = h;
        h = hp1;
        out[n + 1] = h;
    }
}

double mode_eval(const HermiteBasisSpec& spec, int n, double x_mm) {
    spec.validate();
    if (n < 0 || n > spec.n_max) throw ConfigError("mode_eval: n out of range");
    const double u = x_mm / (spec.sigma0_mm * std::sqrt(2.0));
    // (2 sigma0^2)^(-1/4) * h_n(u); the pi^(-1/4) lives inside h_n.
    std::vector<double> h;
    hermite_fn_values(u, n, h);
    return std::pow(2.0 * spec.sigma0_mm * spec.sigma0_mm, -0.25) * h[n];
}

void mode_values(const HermiteBasisSpec& spec, double x_mm, std::vector<double>& out) {
    spec.validate();
    const double u = x_mm / (spec.sigma0_mm * std::sqrt(2.0));
    hermite_fn_values(u, spec.n_max, out);
    const double scale = std::pow(2.0 * spec.sigma0_mm * spec.sigma0_mm, -0.25);
    for (double& v : out) v *= scale;
}

} // namespace bellcv
