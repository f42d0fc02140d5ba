#include "riscci/num/hypergeometric.hpp"
#include "riscci/num/errors.hpp"
#include "riscci/num/gamma.hpp"

#include <cmath>
#include <cstddef>

namespace riscci::num {

namespace {

// Highest termination index if some upper parameter is a non-positive integer.
long terminating_index(const std::vector<Cld>& a) {
    long best = -1;
    for (const Cld& u : a) {
        if (is_nonpositive_integer(u, 1e-14L)) {
            long idx = static_cast<long>(std::llroundl(-u.real()));
            if (best < 0 || idx < best) best = idx;
        }
    }
    return best;
}

} // namespace

std::complex<double> hypergeometric_pFq(const std::vector<std::complex<double>>& a_in,
                                        const std::vector<std::complex<double>>& b_in,
                                        std::complex<double> z_in) {
    std::vector<Cld> a(a_in.begin(), a_in.end());
    std::vector<Cld> b(b_in.begin(), b_in.end());
    Cld z(z_in.real(), z_in.imag());

    const long term_at = terminating_index(a);
    if (term_at < 0) {
        if (a.size() > b.size() + 1)
            throw DivergenceError("pFq: p > q+1 with non-terminating series");
        if (a.size() == b.size() + 1 && std::abs(z) >= 1.0L)
            throw DivergenceError("pFq: p = q+1 requires |z| < 1");
    }
    for (const Cld& l : b) {
        if (is_nonpositive_integer(l, 0.0L)) {
            if (term_at < 0 || -l.real() < static_cast<long double>(term_at))
                throw DivergenceError("pFq: lower parameter is a non-positive integer");
        }
    }

    constexpr long kCap = 1000000;
    constexpr long double kTol = 1e-15L;
    Cld term(1.0L, 0.0L);
    Cld sum(1.0L, 0.0L);
    int small_hits = 0;
    for (long j = 0; j < kCap; ++j) {
        if (term_at >= 0 && j >= term_at)
            return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
        Cld num(1.0L, 0.0L), den(1.0L, 0.0L);
        for (const Cld& u : a) num *= (u + Cld(static_cast<long double>(j), 0.0L));
        for (const Cld& l : b) den *= (l + Cld(static_cast<long double>(j), 0.0L));
        term *= num / den * z / Cld(static_cast<long double>(j + 1), 0.0L);
        sum += term;
        if (std::abs(term) < kTol * std::abs(sum)) {
            if (++small_hits >= 2)
                return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
        } else {
            small_hits = 0;
        }
    }
    throw DivergenceError("pFq: term cap reached without convergence");
}

} // namespace riscci::num
