#pragma once

#include <functional>

namespace riscci::num {

/// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.
/// Splits until the Kronrod error estimate of every subinterval is below
/// tol_rel * |result| + tol_abs; throws QuadratureError past max_intervals.
double integrate_finite(const std::function<double(double)>& f, double a, double b,
                        double tol_rel = 1e-10, double tol_abs = 0.0,
                        int max_intervals = 4000);

/// Integral of f over (0, inf) for continuous integrable f.
///
/// decay_hint > 0 sets the first panel length (~5/decay_hint); panels then
/// double until their contribution is negligible relative to the total.
/// Relative accuracy target 1e-8 against the interval-halving self-estimate.
double integrate_semiinfinite(const std::function<double(double)>& f, double decay_hint);

} // namespace riscci::num
