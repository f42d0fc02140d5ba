#include "riscci/num/quadrature.hpp"
#include "riscci/num/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace riscci::num {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (positive half; node 0 included).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelResult {
    double integral;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    double integral = resk * h;
    double err = std::fabs((resk - resg) * h);
    return {integral, err};
}

struct Piece {
    double err;
    double a, b, integral;
    bool operator<(const Piece& o) const { return err < o.err; }
};

} // namespace

double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double tol_rel, double tol_abs, int max_intervals) {
    if (a == b) return 0.0;
    PanelResult first = gk15(f, a, b);
    std::priority_queue<Piece> heap;
    heap.push({first.error, a, b, first.integral});
    double total = first.integral;
    double total_err = first.error;
    int n = 1;
    while (total_err > tol_rel * std::fabs(total) + tol_abs) {
        if (n >= max_intervals)
            throw QuadratureError("integrate_finite: interval budget exhausted");
        Piece top = heap.top();
        heap.pop();
        double mid = 0.5 * (top.a + top.b);
        PanelResult l = gk15(f, top.a, mid);
        PanelResult r = gk15(f, mid, top.b);
        total += l.integral + r.integral - top.integral;
        total_err += l.error + r.error - top.err;
        heap.push({l.error, top.a, mid, l.integral});
        heap.push({r.error, mid, top.b, r.integral});
        ++n;
    }
    return total;
}

double integrate_semiinfinite(const std::function<double(double)>& f, double decay_hint) {
    if (!(decay_hint > 0.0))
        throw QuadratureError("integrate_semiinfinite: decay_hint must be positive");
    const double tol = 1e-9;
    double t0 = std::max(1e-6, 5.0 / decay_hint);
    double acc = integrate_finite(f, 0.0, t0, tol, 0.0);
    double lo = t0;
    double len = t0;
    int quiet = 0;
    for (int panel = 0; panel < 80; ++panel) {
        double hi = lo + len;
        double part = integrate_finite(f, lo, hi, tol, std::fabs(acc) * 1e-12 + 1e-300);
        acc += part;
        if (std::fabs(part) <= 1e-9 * std::fabs(acc) + 1e-300) {
            if (++quiet >= 3) return acc;
        } else {
            quiet = 0;
        }
        lo = hi;
        len *= 2.0;
    }
    throw QuadratureError("integrate_semiinfinite: tail did not die out");
}

} // namespace riscci::num
