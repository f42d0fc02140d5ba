#pragma once

#include <complex>

namespace riscci::channel {

/// Scenario system parameters. Powers and threshold are stored in dB.
struct SystemConfig {
    int n_elements = 1;     // N reflecting elements
    int n_interferers = 1;  // L equal-power interferers
    double p_s_db = 0.0;    // source power
    double p_i_db = 0.0;    // per-interferer power
    double gamma_th_db = 20.0;

    double p_s() const;       // linear
    double p_i() const;       // linear
    double gamma_th() const;  // linear
    void validate() const;    // throws ValidationError
};

/// Fitted squared generalized-K parameters of the cascaded channel power.
/// k and m are either both real positive or complex conjugates.
struct KgParams {
    std::complex<double> k;
    std::complex<double> m;
    double omega = 1.0;    // E[Z^2]
    double a_scale = 1.0;  // sqrt(k m / omega)
    double sum_km = 2.0;   // k + m (real)
    double prod_km = 1.0;  // k m (real)
};

/// E[(alpha beta)^order] for independent unit-mean-square Rayleigh amplitudes:
/// Gamma(1 + order/2)^2. order <= 12.
double product_moment(int order);

/// Exact E[Z^order] for Z = sum of n_elements i.i.d. double-Rayleigh products,
/// by partition expansion. order in 1..6.
double sum_moment(int n_elements, int order);

/// Three-moment fit of the squared generalized-K law to Z^2.
KgParams fit_kg_parameters(int n_elements);

/// E[Y^order] of the fitted law with E[Y] = omega:
/// (omega/km)^order * prod_{j<order} (k+j)(m+j), real by conjugacy.
double kg_moment(const KgParams& params, int order);

/// Chi-squared (2L degrees) interference power density at x > 0.
double interference_pdf(const SystemConfig& cfg, double x);

} // namespace riscci::channel
