#pragma once

#include <complex>
#include <vector>

namespace riscci::num {

/// Generalized hypergeometric series pFq(a; b; z) by direct summation.
///
/// Terms are accumulated until |term| < 1e-15 |sum| (two consecutive hits),
/// hard cap 1e6 terms. Convergence domain: p <= q for any z; p == q+1 needs
/// |z| < 1 unless an upper parameter terminates the series. Outside that,
/// or at the cap, throws DivergenceError.
std::complex<double> hypergeometric_pFq(const std::vector<std::complex<double>>& a,
                                        const std::vector<std::complex<double>>& b,
                                        std::complex<double> z);

} // namespace riscci::num
