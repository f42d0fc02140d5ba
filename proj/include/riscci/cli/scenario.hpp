#pragma once

#include "riscci/channel/model.hpp"
#include "riscci/mc/simulator.hpp"
#include "riscci/metrics/metrics.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace riscci::cli {

enum class SweepVariable { p_s_db, n_elements, n_interferers, p_i_db };

struct SweepSpec {
    SweepVariable variable = SweepVariable::p_s_db;
    double start = 0.0;
    double stop = 40.0;
    double step = 2.0;
    std::vector<double> grid() const; // validated, inclusive of stop within half a step
};

struct McSpec {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    bool present = false; // whether the scenario file carried an mc block
};

struct Scenario {
    channel::SystemConfig system;
    mc::PhaseShiftModel phase_model;
    metrics::ModulationScheme modulation;
    SweepSpec sweep;
    McSpec mc;

    void validate() const;
    /// System config with the sweep variable replaced by `value`.
    channel::SystemConfig at(double value) const;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

std::string sweep_variable_name(SweepVariable v);

} // namespace riscci::cli
