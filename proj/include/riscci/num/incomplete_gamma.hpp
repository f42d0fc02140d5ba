#pragma once

namespace riscci::num {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x)/Gamma(a),
/// a > 0, x >= 0. Series for x < a+1, Lentz continued fraction otherwise.
double gamma_q(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double gamma_p(double a, double x);

} // namespace riscci::num
