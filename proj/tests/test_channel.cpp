#include "riscci/channel/model.hpp"
#include "riscci/mc/philox.hpp"
#include "riscci/mc/simulator.hpp"
#include "riscci/num/errors.hpp"
#include "riscci/num/gamma.hpp"
#include "riscci/num/meijer.hpp"
#include "riscci/num/quadrature.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace riscci::channel;

namespace {
double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }
} // namespace

TEST_CASE("product moments of the double-Rayleigh term") {
    CHECK(rel(product_moment(2), 1.0) < 1e-15);
    CHECK(rel(product_moment(1), M_PI / 4.0) < 1e-15);
    CHECK(rel(product_moment(4), 4.0) < 1e-14);
}

TEST_CASE("sum moments by partition expansion") {
    CHECK(rel(sum_moment(1, 2), 1.0) < 1e-15);
    // N + N(N-1) (pi/4)^2
    CHECK(rel(sum_moment(10, 2), 10.0 + 90.0 * M_PI * M_PI / 16.0) < 1e-14);
    CHECK(rel(sum_moment(10, 2), 65.5165247561276422) < 1e-14);
    CHECK(rel(sum_moment(2, 4), 25.1033049512255284) < 1e-14);
    CHECK(rel(sum_moment(3, 5), 369.500216262956951) < 1e-14);
    CHECK(rel(sum_moment(10, 6), 544946.032389351001) < 1e-13);
    CHECK_THROWS(sum_moment(10, 7));
    CHECK_THROWS(sum_moment(0, 2));
}

TEST_CASE("sum moments against the Monte Carlo oracle") {
    auto est = riscci::mc::estimate_z_moments(10, {1, 2, 4}, 2000000, 99);
    const int orders[] = {1, 2, 4};
    for (size_t i = 0; i < est.size(); ++i) {
        const double want = sum_moment(10, orders[i]);
        CHECK(std::fabs(est[i].mean - want) < 4.0 * est[i].std_error);
    }
}

TEST_CASE("N=1 fit is the exact double-Rayleigh-squared law") {
    KgParams p = fit_kg_parameters(1);
    CHECK(p.k.imag() == 0.0);
    CHECK(rel(p.k.real(), 1.0) < 1e-12);
    CHECK(rel(p.m.real(), 1.0) < 1e-12);
    CHECK(rel(p.omega, 1.0) < 1e-14);
    CHECK(rel(p.a_scale, 1.0) < 1e-12);
    for (int n = 1; n <= 3; ++n) {
        const double want = std::tgamma(1.0 + n) * std::tgamma(1.0 + n);
        CHECK(rel(kg_moment(p, n), want) < 1e-12);
    }
}

TEST_CASE("fit reproduces the matched moments for every N up to 100") {
    for (int n_el = 1; n_el <= 100; ++n_el) {
        KgParams p = fit_kg_parameters(n_el);
        CHECK(p.sum_km > 0.0);
        CHECK(p.prod_km > 0.0);
        CHECK(rel(p.a_scale * p.a_scale * p.omega, p.prod_km) < 1e-12);
        CHECK(((p.k.imag() == 0.0 && p.m.imag() == 0.0) || p.k == std::conj(p.m)));
        for (int mom = 1; mom <= 3; ++mom) {
            const double want = sum_moment(n_el, 2 * mom);
            CHECK(rel(kg_moment(p, mom), want) < 1e-9);
        }
    }
}

TEST_CASE("diversity order grows with N") {
    double prev = 0.0;
    for (int n_el = 1; n_el <= 100; ++n_el) {
        const double d = fit_kg_parameters(n_el).sum_km / 2.0;
        CHECK(d >= prev);
        prev = d;
    }
    CHECK(rel(fit_kg_parameters(10).sum_km / 2.0, 8.00596548964489) < 1e-12);
    CHECK(rel(fit_kg_parameters(10).omega, 65.5165247561276422) < 1e-13);
}

TEST_CASE("kg_moment basics") {
    KgParams p = fit_kg_parameters(10);
    CHECK(rel(kg_moment(p, 1), p.omega) < 1e-14);
    CHECK(rel(kg_moment(fit_kg_parameters(1), 2), 4.0) < 1e-12);
    CHECK(rel(kg_moment(p, 3), sum_moment(10, 6)) < 1e-9);
    CHECK_THROWS(kg_moment(p, 0));
}

TEST_CASE("interference density") {
    SystemConfig cfg;
    cfg.n_interferers = 1;
    cfg.p_i_db = 0.0;
    CHECK(rel(interference_pdf(cfg, 0.5), std::exp(-0.5)) < 1e-14);
    cfg.n_interferers = 4;
    cfg.p_i_db = 1.0;
    const double mass = riscci::num::integrate_semiinfinite(
        [&](double x) { return x > 0.0 ? interference_pdf(cfg, x) : 0.0; },
        1.0 / cfg.p_i());
    CHECK(std::fabs(mass - 1.0) < 1e-8);
}

TEST_CASE("interference density matches a sampled histogram at the mode") {
    SystemConfig cfg;
    cfg.n_interferers = 4;
    cfg.p_i_db = 1.0;
    // draw X = P_I sum |h_l|^2 from the same generator the simulator uses
    const int n_samp = 4000000;
    const double x0 = 4.0, half_bin = 0.1;
    long hits = 0;
    for (int t = 0; t < n_samp; ++t) {
        riscci::mc::TrialStream ts(555, 0, static_cast<uint64_t>(t));
        double x = 0.0;
        for (int l = 0; l < 4; ++l) x += -std::log(ts.uniform(static_cast<uint32_t>(l)));
        x *= cfg.p_i();
        if (std::fabs(x - x0) < half_bin) ++hits;
    }
    const double density = static_cast<double>(hits) / n_samp / (2.0 * half_bin);
    CHECK(rel(density, interference_pdf(cfg, x0)) < 0.02);
}

TEST_CASE("config validation") {
    SystemConfig cfg;
    cfg.n_elements = 0;
    CHECK_THROWS_AS(cfg.validate(), riscci::ValidationError);
    cfg.n_elements = 1;
    cfg.n_interferers = 0;
    CHECK_THROWS_AS(cfg.validate(), riscci::ValidationError);
}

TEST_CASE("distributional accuracy: fitted CDF vs empirical Z^2 sample") {
    // Kolmogorov-Smirnov distance below 0.02 for N in {1,5,10}, 10^6 draws.
    for (int n_el : {1, 5, 10}) {
        KgParams p = fit_kg_parameters(n_el);
        const int n_samp = 1000000;
        std::vector<double> w(n_samp);
        for (int t = 0; t < n_samp; ++t) {
            riscci::mc::TrialStream ts(4242, 0, static_cast<uint64_t>(t));
            double zsum = 0.0;
            for (int i = 0; i < n_el; ++i)
                zsum += std::sqrt(-std::log(ts.uniform(2 * i))) *
                        std::sqrt(-std::log(ts.uniform(2 * i + 1)));
            w[t] = zsum * zsum;
        }
        std::sort(w.begin(), w.end());
        const double s = p.sum_km / 2.0;
        using C = std::complex<double>;
        const C iv = (C(p.k) - C(p.m)) / 2.0;
        riscci::num::MeijerEvaluator g_fw({C(1.0 - s, 0.0)}, {}, {iv, -iv}, {C(-s, 0.0)});
        const double lg = riscci::num::ln_gamma(C(p.k)).real() +
                          riscci::num::ln_gamma(C(p.m)).real();
        auto cdf_w = [&](double y) {
            const double zz = p.a_scale * p.a_scale * y;
            return std::exp(s * std::log(zz) - lg) * g_fw(zz);
        };
        double ks = 0.0;
        const int stride = 1000;
        for (int i = 0; i < n_samp; i += stride) {
            const double f = cdf_w(w[i]);
            const double fe_lo = static_cast<double>(i) / n_samp;
            const double fe_hi = static_cast<double>(i + 1) / n_samp;
            ks = std::max(ks, std::max(std::fabs(f - fe_lo), std::fabs(f - fe_hi)));
        }
        CAPTURE(n_el);
        CAPTURE(ks);
        CHECK(ks <= 0.02 + static_cast<double>(stride) / n_samp);
    }
}
