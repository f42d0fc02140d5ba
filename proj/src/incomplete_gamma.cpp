#include "riscci/num/incomplete_gamma.hpp"
#include "riscci/num/errors.hpp"
#include "riscci/num/gamma.hpp"

#include <cmath>

namespace riscci::num {

namespace {

double lower_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 600; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) break;
    }
    return sum * std::exp(-x + a * std::log(x) - num::ln_gamma_real(a));
}

double upper_cf(double a, double x) {
    // modified Lentz on the standard continued fraction for Gamma(a,x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 600; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - num::ln_gamma_real(a));
}

} // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw NumericsError("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return lower_series(a, x);
    return 1.0 - upper_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw NumericsError("gamma_q: need a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - lower_series(a, x);
    return upper_cf(a, x);
}

} // namespace riscci::num
