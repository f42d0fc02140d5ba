#pragma once

#include "riscci/channel/model.hpp"
#include "riscci/num/meijer.hpp"

#include <map>
#include <string>

namespace riscci::metrics {

/// (p, q) pair of the conditional-BER kernel q^p/(2 Gamma(p)) e^{-q g} g^{p-1}.
struct ModulationScheme {
    double p = 1.0;
    double q = 1.0;
    std::string name = "dpsk";
    void validate() const; // p > 0, q > 0
};

ModulationScheme modulation_dpsk();
ModulationScheme modulation_bpsk(); // conventional assignment p=0.5, q=1
ModulationScheme modulation_bfsk(); // conventional assignment p=0.5, q=0.5

enum class Method { closed_form, quadrature, asymptotic };

struct MetricResult {
    double value = 0.0;
    Method method = Method::closed_form;
    std::map<std::string, double> diagnostics;
};

/// SIR distribution of one scenario; holds cached G evaluators so sweeping
/// gamma (quadratures) costs one gamma-grid build per parameter class.
/// Instances are cheap value-like objects but not shareable across threads.
class SirDistribution {
public:
    SirDistribution(const channel::SystemConfig& cfg, const channel::KgParams& params);

    double pdf(double gamma) const;
    double cdf(double gamma) const;

    const channel::SystemConfig& config() const { return cfg_; }
    const channel::KgParams& params() const { return params_; }

private:
    channel::SystemConfig cfg_;
    channel::KgParams params_;
    double sigma_;      // (k+m)/2
    double ln_gamma_km_; // Re ln Gamma(k) + Re ln Gamma(m)
    double z_factor_;   // A^2 P_I / P_s
    num::MeijerEvaluator g_pdf_;
    num::MeijerEvaluator g_cdf_;
};

double sir_pdf(const channel::SystemConfig& cfg, const channel::KgParams& params, double gamma);
double sir_cdf(const channel::SystemConfig& cfg, const channel::KgParams& params, double gamma);

/// Outage probability: SIR CDF at the linear threshold.
MetricResult outage_probability(const channel::SystemConfig& cfg,
                                const channel::KgParams& params);

/// High-power closed-form outage asymptote (power law of order (k+m)/2).
MetricResult outage_asymptotic(const channel::SystemConfig& cfg,
                               const channel::KgParams& params);

/// (k+m)/2 of the fitted parameters.
double diversity_order(const channel::KgParams& params);

/// Closed-form average BER (argument-inversion applied when the G argument
/// exceeds one). Cross-checked against ber_quadrature by the test suite.
MetricResult average_ber(const channel::SystemConfig& cfg, const channel::KgParams& params,
                         const ModulationScheme& mod);

/// Independent route: q^p/(2 Gamma(p)) * integral of e^{-q g} g^{p-1} F(g).
double ber_quadrature(const channel::SystemConfig& cfg, const channel::KgParams& params,
                      const ModulationScheme& mod);

/// Ergodic capacity. Primary value from the log-integral over the SIR
/// density; the closed form (with the stray threshold factor dropped) is
/// reported in diagnostics together with its relative deviation.
MetricResult ergodic_capacity(const channel::SystemConfig& cfg,
                              const channel::KgParams& params);

} // namespace riscci::metrics
