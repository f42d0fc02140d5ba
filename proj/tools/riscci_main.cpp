// Command-line front end: fitting, analytic sweeps, Monte Carlo sweeps, and
// merged comparison tables for the interference-limited RIS link model.

#include "riscci/cli/scenario.hpp"
#include "riscci/channel/model.hpp"
#include "riscci/mc/simulator.hpp"
#include "riscci/metrics/metrics.hpp"
#include "riscci/num/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace riscci;

std::string fmt9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct OutputTarget {
    std::unique_ptr<std::ofstream> file;
    std::ostream* os = &std::cout;
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file = std::make_unique<std::ofstream>(path);
            if (!*file) throw ValidationError("cannot open output file: " + path);
            os = file.get();
        }
    }
};

struct AnalyticRow {
    double sweep_value;
    double op_exact;
    double op_asymptotic;
    double ber;
    double capacity;
};

AnalyticRow analytic_row(const cli::Scenario& sc, double v) {
    channel::SystemConfig cfg = sc.at(v);
    channel::KgParams prm = channel::fit_kg_parameters(cfg.n_elements);
    metrics::SirDistribution dist(cfg, prm);
    AnalyticRow row{};
    row.sweep_value = v;
    row.op_exact = dist.cdf(cfg.gamma_th());
    row.op_asymptotic = metrics::outage_asymptotic(cfg, prm).value;
    row.ber = metrics::average_ber(cfg, prm, sc.modulation).value;
    row.capacity = metrics::ergodic_capacity(cfg, prm).value;
    return row;
}

struct McRow {
    double sweep_value;
    mc::McEstimate op, ber, cap;
};

McRow mc_row(const cli::Scenario& sc, double v) {
    channel::SystemConfig cfg = sc.at(v);
    McRow row{};
    row.sweep_value = v;
    row.op = mc::estimate_outage(cfg, sc.phase_model, sc.mc.trials, sc.mc.seed);
    row.ber = mc::estimate_ber(cfg, sc.phase_model, sc.modulation, sc.mc.trials, sc.mc.seed);
    row.cap = mc::estimate_capacity(cfg, sc.phase_model, sc.mc.trials, sc.mc.seed);
    return row;
}

const char* phase_model_name(const mc::PhaseShiftModel& m) {
    return m.kind == mc::PhaseShiftModel::Kind::ideal ? "ideal" : "practical";
}

// Least-squares slope of log10(op) against log10(p_s) over rows with
// op <= threshold (at least three points required).
std::optional<double> fitted_loglog_slope(const std::vector<AnalyticRow>& rows,
                                          double threshold) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows)
        if (r.op_exact > 0.0 && r.op_exact <= threshold)
            pts.emplace_back(r.sweep_value / 10.0, std::log10(r.op_exact));
    if (pts.size() < 3) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(pts.size());
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return -(n * sxy - sx * sy) / denom;
}

int cmd_fit(int n) {
    channel::KgParams p = channel::fit_kg_parameters(n);
    nlohmann::json j;
    j["n_elements"] = n;
    j["k"] = {{"re", p.k.real()}, {"im", p.k.imag()}};
    j["m"] = {{"re", p.m.real()}, {"im", p.m.imag()}};
    j["omega"] = p.omega;
    j["a_scale"] = p.a_scale;
    j["sum_km"] = p.sum_km;
    j["prod_km"] = p.prod_km;
    j["diversity_order"] = metrics::diversity_order(p);
    std::cout << j.dump(2) << "\n";
    return 0;
}

// Sweep points run concurrently; rows are buffered and emitted in grid order.
std::vector<AnalyticRow> analytic_rows(const cli::Scenario& sc) {
    const std::vector<double> grid = sc.sweep.grid();
    std::vector<AnalyticRow> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                rows[i] = analytic_row(sc, grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::min<unsigned>(mc::worker_threads(),
                                                static_cast<unsigned>(grid.size()));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

int cmd_analyze(const cli::Scenario& sc, const std::string& out_path) {
    OutputTarget out(out_path);
    std::vector<AnalyticRow> rows = analytic_rows(sc);
    *out.os << "sweep_value,op_exact,op_asymptotic,ber,capacity\n";
    for (const AnalyticRow& r : rows) {
        *out.os << fmt9(r.sweep_value) << ',' << fmt9(r.op_exact) << ','
                << fmt9(r.op_asymptotic) << ',' << fmt9(r.ber) << ',' << fmt9(r.capacity)
                << "\n";
    }
    out.os->flush();
    return 0;
}

int cmd_simulate(const cli::Scenario& sc, const std::string& out_path) {
    if (!sc.mc.present)
        throw ValidationError("simulate requires an mc block in the scenario");
    OutputTarget out(out_path);
    *out.os << "sweep_value,op_mc,op_mc_stderr,ber_mc,ber_mc_stderr,cap_mc,cap_mc_stderr,"
               "phase_model\n";
    for (double v : sc.sweep.grid()) {
        McRow r = mc_row(sc, v);
        *out.os << fmt9(r.sweep_value) << ',' << fmt9(r.op.mean) << ','
                << fmt9(r.op.std_error) << ',' << fmt9(r.ber.mean) << ','
                << fmt9(r.ber.std_error) << ',' << fmt9(r.cap.mean) << ','
                << fmt9(r.cap.std_error) << ',' << phase_model_name(sc.phase_model) << "\n";
    }
    out.os->flush();
    return 0;
}

int cmd_compare(const cli::Scenario& sc, const std::string& out_path,
                const std::string& summary_path) {
    OutputTarget out(out_path);
    *out.os << "sweep_value,op_exact,op_asymptotic,op_mc,op_mc_stderr,ber,ber_mc,"
               "ber_mc_stderr,capacity,cap_mc,cap_mc_stderr,phase_model\n";
    std::vector<AnalyticRow> arows = analytic_rows(sc);
    double max_gap_sigma = 0.0;
    const std::vector<double> grid = sc.sweep.grid();
    for (size_t i = 0; i < grid.size(); ++i) {
        const double v = grid[i];
        const AnalyticRow& a = arows[i];
        McRow m = mc_row(sc, v);
        // one-sample proportion scale: sigma from the closed-form value when
        // the empirical stderr degenerates at rare-event rows
        const double p0 = std::clamp(std::fabs(a.op_exact), 0.0, 1.0);
        const double se_h = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(sc.mc.trials));
        const double se = std::max(m.op.std_error, se_h);
        if (se > 0.0)
            max_gap_sigma = std::max(max_gap_sigma, std::fabs(a.op_exact - m.op.mean) / se);
        *out.os << fmt9(v) << ',' << fmt9(a.op_exact) << ',' << fmt9(a.op_asymptotic) << ','
                << fmt9(m.op.mean) << ',' << fmt9(m.op.std_error) << ',' << fmt9(a.ber) << ','
                << fmt9(m.ber.mean) << ',' << fmt9(m.ber.std_error) << ',' << fmt9(a.capacity)
                << ',' << fmt9(m.cap.mean) << ',' << fmt9(m.cap.std_error) << ','
                << phase_model_name(sc.phase_model) << "\n";
    }
    out.os->flush();

    channel::KgParams prm = channel::fit_kg_parameters(sc.system.n_elements);
    nlohmann::json summary;
    summary["max_op_gap_sigma"] = max_gap_sigma;
    summary["diversity_order"] = metrics::diversity_order(prm);
    // the log-log slope is defined against the source power axis only
    if (sc.sweep.variable == cli::SweepVariable::p_s_db) {
        if (auto slope = fitted_loglog_slope(arows, 1e-3)) {
            summary["fitted_slope"] = *slope;
            summary["slope_rel_error"] = std::fabs(*slope - metrics::diversity_order(prm)) /
                                         metrics::diversity_order(prm);
        } else {
            summary["fitted_slope"] = nullptr;
        }
    } else {
        summary["fitted_slope"] = nullptr;
    }
    if (summary_path.empty()) {
        std::cerr << summary.dump(2) << "\n";
    } else {
        std::ofstream sf(summary_path);
        if (!sf) throw ValidationError("cannot open summary file: " + summary_path);
        sf << summary.dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Performance model of a RIS-aided link under co-channel interference"};
    app.require_subcommand(1);

    int fit_n = 1;
    auto* fit = app.add_subcommand("fit", "Fit the cascaded-channel distribution parameters");
    fit->add_option("--n", fit_n, "number of reflecting elements")->required();

    std::string scenario_path, out_path, summary_path;
    std::optional<std::uint64_t> trials_override, seed_override;

    auto add_common = [&](CLI::App* cmd, bool with_mc) {
        cmd->add_option("--scenario", scenario_path, "scenario JSON file")->required();
        cmd->add_option("--out", out_path, "output CSV path (default stdout)");
        if (with_mc) {
            cmd->add_option("--trials", trials_override, "override mc.trials");
            cmd->add_option("--seed", seed_override, "override mc.seed");
        }
    };
    auto* analyze = app.add_subcommand("analyze", "Closed-form metric sweep (CSV)");
    add_common(analyze, false);
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo metric sweep (CSV)");
    add_common(simulate, true);
    auto* compare = app.add_subcommand("compare", "Merged analytic/asymptotic/MC table");
    add_common(compare, true);
    compare->add_option("--summary", summary_path, "summary JSON path (default stderr)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fit->parsed()) return cmd_fit(fit_n);
        cli::Scenario sc = cli::load_scenario(scenario_path);
        if (trials_override) {
            sc.mc.trials = *trials_override;
            sc.mc.present = true;
            if (sc.mc.trials < 1) throw ValidationError("trials must be >= 1");
        }
        if (seed_override) sc.mc.seed = *seed_override;
        if (analyze->parsed()) return cmd_analyze(sc, out_path);
        if (simulate->parsed()) return cmd_simulate(sc, out_path);
        if (compare->parsed()) return cmd_compare(sc, out_path, summary_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
