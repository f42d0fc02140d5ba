#include "riscci/mc/simulator.hpp"
#include "riscci/mc/philox.hpp"
#include "riscci/num/errors.hpp"
#include "riscci/num/incomplete_gamma.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <thread>

namespace riscci::mc {

namespace {

constexpr double kTwoPi = 6.28318530717958647692528676656;
constexpr std::uint64_t kChunk = 4096; // fixed chunk size keeps reductions stable

double wrap_2pi(double x) {
    double w = std::fmod(x, kTwoPi);
    return w < 0.0 ? w + kTwoPi : w;
}

} // namespace

void PhaseShiftModel::validate() const {
    if (kind == Kind::ideal) return;
    if (!(min_amplitude > 0.0) || min_amplitude > 1.0)
        throw ValidationError("phase model: min_amplitude must be in (0,1]");
    if (!std::isfinite(phase_offset) || !(steepness > 0.0))
        throw ValidationError("phase model: bad phase_offset/steepness");
}

double PhaseShiftModel::amplitude(double phi) const {
    if (kind == Kind::ideal) return 1.0;
    const double base = (std::sin(phi - phase_offset) + 1.0) / 2.0;
    return (1.0 - min_amplitude) * std::pow(base, steepness) + min_amplitude;
}

PhaseShiftModel ideal_phases() { return {PhaseShiftModel::Kind::ideal, 1.0, 0.0, 1.0}; }

PhaseShiftModel practical_phases(double min_amplitude, double phase_offset, double steepness) {
    return {PhaseShiftModel::Kind::practical, min_amplitude, phase_offset, steepness};
}

// Fixed per-trial lane layout so that ideal and practical runs consume the
// same channel draws: [0, 2N) cascaded amplitudes, [2N, 2N+2L) interferers,
// [2N+2L, 2N+2L+2N) element phases (read only by the practical model).
double sample_sir(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                  std::uint64_t seed, std::uint64_t trial) {
    const int N = cfg.n_elements;
    const int L = cfg.n_interferers;
    TrialStream ts(seed, 0, trial);
    double amp = 0.0;
    for (int i = 0; i < N; ++i) {
        const double a = std::sqrt(-std::log(ts.uniform(2 * i)));
        const double b = std::sqrt(-std::log(ts.uniform(2 * i + 1)));
        double w = 1.0;
        if (model.kind == PhaseShiftModel::Kind::practical) {
            const uint32_t base = static_cast<uint32_t>(2 * N + 2 * L + 2 * i);
            const double theta = kTwoPi * ts.uniform(base);
            const double phi_g = kTwoPi * ts.uniform(base + 1);
            w = model.amplitude(wrap_2pi(theta + phi_g));
        }
        amp += w * a * b;
    }
    double interference = 0.0;
    for (int l = 0; l < L; ++l) {
        const uint32_t base = static_cast<uint32_t>(2 * N + 2 * l);
        const double r = std::sqrt(-std::log(ts.uniform(base)));
        const double ph = kTwoPi * ts.uniform(base + 1);
        const double hr = r * std::cos(ph);
        const double hi = r * std::sin(ph);
        interference += hr * hr + hi * hi;
    }
    return cfg.p_s() * amp * amp / (cfg.p_i() * interference);
}

unsigned worker_threads() {
    if (const char* env = std::getenv("RISCCI_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// Chunked deterministic reduction: per-chunk partial sums are accumulated in
// trial order and combined in chunk order, so the result is independent of
// the number of workers.
struct Sums {
    double s1 = 0.0;
    double s2 = 0.0;
};

Sums reduce_trials(std::uint64_t trials, const std::function<double(std::uint64_t)>& value_of) {
    const std::uint64_t nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<Sums> partial(nchunks);
    const unsigned workers = worker_threads();
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= nchunks) return;
            const std::uint64_t lo = c * kChunk;
            const std::uint64_t hi = std::min(trials, lo + kChunk);
            Sums s;
            for (std::uint64_t t = lo; t < hi; ++t) {
                const double v = value_of(t);
                s.s1 += v;
                s.s2 += v * v;
            }
            partial[c] = s;
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    Sums total;
    for (const Sums& s : partial) {
        total.s1 += s.s1;
        total.s2 += s.s2;
    }
    return total;
}

McEstimate mean_estimate(std::uint64_t trials, std::uint64_t seed, const Sums& s) {
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.mean = s.s1 / static_cast<double>(trials);
    const double var =
        std::max(0.0, s.s2 / static_cast<double>(trials) - e.mean * e.mean);
    e.std_error = std::sqrt(var / static_cast<double>(trials));
    return e;
}

} // namespace

McEstimate estimate_outage(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                           std::uint64_t trials, std::uint64_t seed) {
    cfg.validate();
    model.validate();
    if (trials < 1) throw ValidationError("estimate_outage: trials must be >= 1");
    const double gth = cfg.gamma_th();
    Sums s = reduce_trials(trials, [&](std::uint64_t t) {
        return sample_sir(cfg, model, seed, t) < gth ? 1.0 : 0.0;
    });
    McEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.mean = s.s1 / static_cast<double>(trials);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    return e;
}

McEstimate estimate_ber(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                        const metrics::ModulationScheme& mod, std::uint64_t trials,
                        std::uint64_t seed) {
    cfg.validate();
    model.validate();
    mod.validate();
    if (trials < 1) throw ValidationError("estimate_ber: trials must be >= 1");
    Sums s = reduce_trials(trials, [&](std::uint64_t t) {
        const double g = sample_sir(cfg, model, seed, t);
        return num::gamma_q(mod.p, mod.q * g) / 2.0;
    });
    return mean_estimate(trials, seed, s);
}

McEstimate estimate_capacity(const channel::SystemConfig& cfg, const PhaseShiftModel& model,
                             std::uint64_t trials, std::uint64_t seed) {
    cfg.validate();
    model.validate();
    if (trials < 1) throw ValidationError("estimate_capacity: trials must be >= 1");
    Sums s = reduce_trials(trials, [&](std::uint64_t t) {
        return std::log2(1.0 + sample_sir(cfg, model, seed, t));
    });
    return mean_estimate(trials, seed, s);
}

std::vector<McEstimate> estimate_z_moments(int n_elements, const std::vector<int>& orders,
                                           std::uint64_t trials, std::uint64_t seed) {
    if (n_elements < 1) throw ValidationError("estimate_z_moments: n_elements must be >= 1");
    if (trials < 1) throw ValidationError("estimate_z_moments: trials must be >= 1");
    for (int o : orders)
        if (o < 1 || o > 6)
            throw ValidationError("estimate_z_moments: orders must lie in 1..6");
    std::vector<McEstimate> out;
    out.reserve(orders.size());
    for (int o : orders) {
        Sums s = reduce_trials(trials, [&](std::uint64_t t) {
            TrialStream ts(seed, 0, t);
            double z = 0.0;
            for (int i = 0; i < n_elements; ++i)
                z += std::sqrt(-std::log(ts.uniform(2 * i))) *
                     std::sqrt(-std::log(ts.uniform(2 * i + 1)));
            return std::pow(z, o);
        });
        out.push_back(mean_estimate(trials, seed, s));
    }
    return out;
}

} // namespace riscci::mc
