#include "riscci/num/gamma.hpp"
#include "riscci/num/errors.hpp"

#include <cmath>

namespace riscci::num {

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;
constexpr long double kLnPi = 1.14472988584940017414342735135L;
constexpr long double kHalfLn2Pi = 0.918938533204672741780329736406L;

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..13.
constexpr long double kStirling[] = {
    1.0L / 12.0L,
    -1.0L / 360.0L,
    1.0L / 1260.0L,
    -1.0L / 1680.0L,
    1.0L / 1188.0L,
    -691.0L / 360360.0L,
    1.0L / 156.0L,
    -3617.0L / 122400.0L,
    43867.0L / 244188.0L,
    -174611.0L / 125400.0L,
    854513.0L / 63756.0L,
    -236364091.0L / 1506960.0L,
    8553103.0L / 85932.0L,
};

// Stirling expansion, valid for Re(w) >= 14 (after shifting).
Cld stirling(Cld w) {
    Cld lw = std::log(w);
    Cld acc = (w - Cld(0.5L, 0.0L)) * lw - w + Cld(kHalfLn2Pi, 0.0L);
    Cld w2 = w * w;
    Cld p = w;
    for (long double c : kStirling) {
        acc += Cld(c, 0.0L) / p;
        p *= w2;
    }
    return acc;
}

// log(sin(pi z)) for Im(z) >= 0, analytic in the upper half plane,
// matching the principal value on (0,1).
Cld log_sin_pi_upper(Cld z) {
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2 i)
    Cld i(0.0L, 1.0L);
    Cld e = std::exp(Cld(0.0L, 2.0L * kPi) * z);
    return -i * kPi * z + std::log(Cld(1.0L, 0.0L) - e) + Cld(0.0L, kPi / 2.0L) -
           Cld(0.69314718055994530941723212146L, 0.0L);
}

Cld ln_gamma_upper(Cld z); // forward; Im(z) >= 0 assumed

Cld ln_gamma_reflect(Cld z) {
    // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
    if (z.imag() == 0.0L) {
        long double x = z.real();
        long double s = std::sin(kPi * x);
        Cld lg1mz = ln_gamma_upper(Cld(1.0L - x, 0.0L));
        long double re = kLnPi - std::log(std::fabs(s)) - lg1mz.real();
        long double im = (s < 0.0L) ? kPi : 0.0L; // Gamma < 0 between odd pairs of poles
        return {re, im};
    }
    return Cld(kLnPi, 0.0L) - log_sin_pi_upper(z) - ln_gamma_upper(Cld(1.0L, 0.0L) - z);
}

Cld ln_gamma_upper(Cld z) {
    if (z.real() < 0.5L) return ln_gamma_reflect(z);
    Cld w = z;
    Cld shift(0.0L, 0.0L);
    while (w.real() < 14.0L) {
        shift += std::log(w);
        w += Cld(1.0L, 0.0L);
    }
    return stirling(w) - shift;
}

} // namespace

bool is_real_integer(Cld z, long double tol) {
    if (std::fabs(z.imag()) > tol) return false;
    return std::fabs(z.real() - std::roundl(z.real())) <= tol;
}

bool is_nonpositive_integer(Cld z, long double tol) {
    return is_real_integer(z, tol) && z.real() <= tol;
}

Cld ln_gamma(Cld z) {
    if (is_nonpositive_integer(z, 0.0L))
        throw PoleError("ln_gamma: pole at non-positive integer");
    if (z.imag() < 0.0L) return std::conj(ln_gamma(std::conj(z)));
    return ln_gamma_upper(z);
}

double ln_gamma_real(double x) {
    if (!(x > 0.0)) throw PoleError("ln_gamma_real: argument must be positive");
    return static_cast<double>(ln_gamma_upper(Cld(static_cast<long double>(x), 0.0L)).real());
}

} // namespace riscci::num
