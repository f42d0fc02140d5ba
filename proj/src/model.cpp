#include "riscci/channel/model.hpp"
#include "riscci/num/errors.hpp"

#include <cmath>
#include <vector>

namespace riscci::channel {

double SystemConfig::p_s() const { return std::pow(10.0, p_s_db / 10.0); }
double SystemConfig::p_i() const { return std::pow(10.0, p_i_db / 10.0); }
double SystemConfig::gamma_th() const { return std::pow(10.0, gamma_th_db / 10.0); }

void SystemConfig::validate() const {
    if (n_elements < 1) throw ValidationError("n_elements must be >= 1");
    if (n_interferers < 1) throw ValidationError("n_interferers must be >= 1");
    if (!(p_s() > 0.0) || !std::isfinite(p_s()))
        throw ValidationError("p_s_db yields a non-positive linear power");
    if (!(p_i() > 0.0) || !std::isfinite(p_i()))
        throw ValidationError("p_i_db yields a non-positive linear power");
    if (!std::isfinite(gamma_th_db)) throw ValidationError("gamma_th_db must be finite");
}

double product_moment(int order) {
    if (order < 0 || order > 12)
        throw NumericsError("product_moment: order must be in 0..12");
    double g = std::tgamma(1.0 + order / 2.0);
    return g * g;
}

namespace {

// Enumerate integer partitions of r (r <= 6); callback gets (sizes, mults).
template <typename F>
void for_each_partition(int r, F&& fn) {
    std::vector<int> part;
    // descending compositions: recursive
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            fn(part);
            return;
        }
        for (int s = std::min(rest, maxpart); s >= 1; --s) {
            part.push_back(s);
            self(self, rest - s, s);
            part.pop_back();
        }
    };
    rec(rec, r, r);
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

double sum_moment(int n_elements, int order) {
    if (n_elements < 1) throw NumericsError("sum_moment: n_elements must be >= 1");
    if (order < 1 || order > 6)
        throw NumericsError("sum_moment: order must be in 1..6");
    double total = 0.0;
    for_each_partition(order, [&](const std::vector<int>& part) {
        const int parts = static_cast<int>(part.size());
        if (parts > n_elements) return;
        double coef = factorial(order);
        int run = 1;
        for (int i = 0; i < parts; ++i) {
            coef /= factorial(part[i]);
            if (i + 1 < parts && part[i + 1] == part[i]) {
                ++run;
            } else {
                coef /= factorial(run);
                run = 1;
            }
        }
        double falling = 1.0;
        for (int i = 0; i < parts; ++i) falling *= (n_elements - i);
        double mom = 1.0;
        for (int s : part) mom *= product_moment(s);
        total += coef * falling * mom;
    });
    return total;
}

KgParams fit_kg_parameters(int n_elements) {
    if (n_elements < 1) throw FitError("fit_kg_parameters: n_elements must be >= 1");
    const double omega = sum_moment(n_elements, 2);
    const double mu2 = sum_moment(n_elements, 4) / (omega * omega);
    const double mu3 = sum_moment(n_elements, 6) / (omega * omega * omega);
    const double s = (4.0 * mu2 - 3.0 - mu3 / mu2) / 2.0;
    const double p = mu2 - 1.0 - s;
    if (!(p > 0.0)) throw FitError("fit_kg_parameters: infeasible fit (p <= 0)");
    const double sum_km = s / p;
    const double prod_km = 1.0 / p;
    if (!(sum_km > 0.0)) throw FitError("fit_kg_parameters: infeasible fit (k+m <= 0)");
    const double disc = sum_km * sum_km - 4.0 * prod_km;
    KgParams out;
    out.omega = omega;
    out.sum_km = sum_km;
    out.prod_km = prod_km;
    out.a_scale = std::sqrt(prod_km / omega);
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        out.k = {(sum_km + root) / 2.0, 0.0};
        out.m = {(sum_km - root) / 2.0, 0.0};
    } else {
        const double root = std::sqrt(-disc);
        out.k = {sum_km / 2.0, root / 2.0};
        out.m = std::conj(out.k);
    }
    return out;
}

double kg_moment(const KgParams& params, int order) {
    if (order < 1) throw NumericsError("kg_moment: order must be >= 1");
    std::complex<long double> k(params.k.real(), params.k.imag());
    std::complex<long double> m(params.m.real(), params.m.imag());
    std::complex<long double> acc(1.0L, 0.0L);
    for (int j = 0; j < order; ++j) {
        long double jl = static_cast<long double>(j);
        acc *= (k + jl) * (m + jl);
    }
    const long double scale =
        std::pow(static_cast<long double>(params.omega) / static_cast<long double>(params.prod_km),
                 static_cast<long double>(order));
    acc *= scale;
    if (std::fabs(acc.imag()) > 1e-10L * std::fabs(acc.real()))
        throw NumericsError("kg_moment: conjugate-pair product left an imaginary residue");
    return static_cast<double>(acc.real());
}

double interference_pdf(const SystemConfig& cfg, double x) {
    if (!(x > 0.0)) throw NumericsError("interference_pdf: x must be positive");
    const int L = cfg.n_interferers;
    const double pi_lin = cfg.p_i();
    return std::pow(x, L - 1) * std::exp(-x / pi_lin) /
           (std::pow(pi_lin, L) * std::tgamma(static_cast<double>(L)));
}

} // namespace riscci::channel
