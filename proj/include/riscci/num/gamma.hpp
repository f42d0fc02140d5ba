#pragma once

#include <complex>

namespace riscci::num {

using Cld = std::complex<long double>;
using Cd  = std::complex<double>;

/// Principal-branch log-gamma for complex argument.
///
/// Stirling series after argument shift for Re(z) >= 0.5, reflection
/// formula otherwise. Conjugate symmetry ln_gamma(conj z) = conj(ln_gamma(z))
/// holds exactly. Throws PoleError at non-positive integers.
Cld ln_gamma(Cld z);

inline Cd ln_gamma(Cd z) {
    Cld r = ln_gamma(Cld(z.real(), z.imag()));
    return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

/// Log-gamma for positive real argument; pure (no signgam global), safe to
/// call from worker threads.
double ln_gamma_real(double x);

/// Distance from x to the nearest non-positive integer (0 if x is not real-ish).
/// Helper for pole detection in the Meijer G machinery.
bool is_nonpositive_integer(Cld z, long double tol);

/// True when z - round(z) is within tol and |Im z| <= tol.
bool is_real_integer(Cld z, long double tol);

} // namespace riscci::num
