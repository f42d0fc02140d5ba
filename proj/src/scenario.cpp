#include "riscci/cli/scenario.hpp"
#include "riscci/num/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace riscci::cli {

using nlohmann::json;

std::vector<double> SweepSpec::grid() const {
    if (!(step > 0.0)) throw ValidationError("sweep.step must be positive");
    if (stop < start) throw ValidationError("sweep.stop must be >= sweep.start");
    std::vector<double> g;
    for (double v = start; v <= stop + step * 0.5; v += step) g.push_back(v);
    if (g.empty()) throw ValidationError("sweep grid is empty");
    return g;
}

void Scenario::validate() const {
    system.validate();
    phase_model.validate();
    modulation.validate();
    (void)sweep.grid();
    if (mc.trials < 1) throw ValidationError("mc.trials must be >= 1");
    if (sweep.variable == SweepVariable::n_elements ||
        sweep.variable == SweepVariable::n_interferers) {
        for (double v : sweep.grid())
            if (v < 1.0 || std::fabs(v - std::round(v)) > 1e-9)
                throw ValidationError("integer sweep variable requires integer grid values");
    }
}

channel::SystemConfig Scenario::at(double value) const {
    channel::SystemConfig cfg = system;
    switch (sweep.variable) {
        case SweepVariable::p_s_db: cfg.p_s_db = value; break;
        case SweepVariable::p_i_db: cfg.p_i_db = value; break;
        case SweepVariable::n_elements: cfg.n_elements = static_cast<int>(std::lround(value)); break;
        case SweepVariable::n_interferers:
            cfg.n_interferers = static_cast<int>(std::lround(value));
            break;
    }
    return cfg;
}

std::string sweep_variable_name(SweepVariable v) {
    switch (v) {
        case SweepVariable::p_s_db: return "p_s_db";
        case SweepVariable::p_i_db: return "p_i_db";
        case SweepVariable::n_elements: return "n_elements";
        case SweepVariable::n_interferers: return "n_interferers";
    }
    return "?";
}

namespace {

SweepVariable parse_variable(const std::string& s) {
    if (s == "p_s_db") return SweepVariable::p_s_db;
    if (s == "p_i_db") return SweepVariable::p_i_db;
    if (s == "n_elements") return SweepVariable::n_elements;
    if (s == "n_interferers") return SweepVariable::n_interferers;
    throw ValidationError("unknown sweep variable: " + s);
}

template <typename T>
T require(const json& j, const char* key) {
    if (!j.contains(key)) throw ValidationError(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("bad field '") + key + "': " + e.what());
    }
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scenario JSON parse error: ") + e.what());
    }
    Scenario sc;
    const json& sys = j.contains("system") ? j.at("system")
                                           : throw ValidationError("missing field: system");
    sc.system.n_elements = require<int>(sys, "n_elements");
    sc.system.n_interferers = require<int>(sys, "n_interferers");
    sc.system.p_s_db = require<double>(sys, "p_s_db");
    sc.system.p_i_db = require<double>(sys, "p_i_db");
    sc.system.gamma_th_db = require<double>(sys, "gamma_th_db");

    if (j.contains("phase_model")) {
        const json& pm = j.at("phase_model");
        const std::string kind = require<std::string>(pm, "kind");
        if (kind == "ideal") {
            sc.phase_model = mc::ideal_phases();
        } else if (kind == "practical") {
            sc.phase_model = mc::practical_phases(require<double>(pm, "min_amplitude"),
                                                  require<double>(pm, "phase_offset"),
                                                  require<double>(pm, "steepness"));
        } else {
            throw ValidationError("phase_model.kind must be 'ideal' or 'practical'");
        }
    }
    if (j.contains("modulation")) {
        const json& md = j.at("modulation");
        sc.modulation.p = require<double>(md, "p");
        sc.modulation.q = require<double>(md, "q");
        sc.modulation.name = md.value("name", "custom");
    }
    const json& sw = j.contains("sweep") ? j.at("sweep")
                                         : throw ValidationError("missing field: sweep");
    sc.sweep.variable = parse_variable(require<std::string>(sw, "variable"));
    sc.sweep.start = require<double>(sw, "start");
    sc.sweep.stop = require<double>(sw, "stop");
    sc.sweep.step = require<double>(sw, "step");
    if (j.contains("mc")) {
        const json& m = j.at("mc");
        sc.mc.trials = require<std::uint64_t>(m, "trials");
        sc.mc.seed = require<std::uint64_t>(m, "seed");
        sc.mc.present = true;
    }
    sc.validate();
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

} // namespace riscci::cli
