#pragma once

#include "riscci/channel/model.hpp"
#include "riscci/metrics/metrics.hpp"

#include <cstdint>
#include <vector>

namespace riscci::mc {

/// Reflection-amplitude model of the surface elements.
struct PhaseShiftModel {
    enum class Kind { ideal, practical };
    Kind kind = Kind::ideal;
    double min_amplitude = 0.8;       // varpi_min
    double phase_offset = 1.350884841043611; // kappa, radians (0.43 pi)
    double steepness = 1.6;           // varsigma
    void validate() const;

    /// omega(phi) = (1 - varpi)((sin(phi - kappa) + 1)/2)^varsigma + varpi
    double amplitude(double phi) const;
};

PhaseShiftModel ideal_phases();
PhaseShiftModel practical_phases(double min_amplitude = 0.8,
                                 double phase_offset = 1.350884841043611,
                                 double steepness = 1.6);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

/// One SIR draw. Trials are indexed so that identical (seed, trial) pairs
/// reproduce identical channel coefficients under either phase model.
double sample_sir(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                  std::uint64_t seed, std::uint64_t trial);

McEstimate estimate_outage(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                           std::uint64_t trials, std::uint64_t seed);

McEstimate estimate_ber(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                        const metrics::ModulationScheme& mod, std::uint64_t trials,
                        std::uint64_t seed);

McEstimate estimate_capacity(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                             std::uint64_t trials, std::uint64_t seed);

/// Sample moments E[Z^order] of the cascaded amplitude sum.
std::vector<McEstimate> estimate_z_moments(int n_elements, const std::vector<int>& orders,
                                           std::uint64_t trials, std::uint64_t seed);

/// Thread count used by the chunked estimators: RISCCI_THREADS when set,
/// hardware concurrency otherwise. Results are bit-identical regardless.
unsigned worker_threads();

} // namespace riscci::mc
