#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace riscci::num {

/// One Meijer G-function instance G^{m,n}_{p,q}(z | a; b).
///
/// a_front holds the n upper parameters entering as Gamma(1-a_i-s),
/// a_back the remaining p-n; b_front holds the m lower parameters entering
/// as Gamma(b_j+s), b_back the remaining q-m. z must be real positive.
struct MeijerGSpec {
    std::vector<std::complex<double>> a_front;
    std::vector<std::complex<double>> a_back;
    std::vector<std::complex<double>> b_front;
    std::vector<std::complex<double>> b_back;
    double z = 1.0;

    int p() const { return static_cast<int>(a_front.size() + a_back.size()); }
    int q() const { return static_cast<int>(b_front.size() + b_back.size()); }
    int m() const { return static_cast<int>(b_front.size()); }
    int n() const { return static_cast<int>(a_front.size()); }

    /// Argument-inversion image: G^{m,n}_{p,q}(z|a;b) = G^{n,m}_{q,p}(1/z|1-b;1-a).
    MeijerGSpec inverted() const;
};

/// Reusable evaluator for one parameter set (z varies per call).
///
/// Routing: ascending residue series (small z, cancellation-guarded, with
/// the +-eps split for degenerate lower-parameter clusters), truncated
/// descending series (very large z), vertical-contour trapezoid rule in
/// between. The contour samples are cached, so sweeping z over one
/// parameter set costs one gamma-grid evaluation total.
class MeijerEvaluator {
public:
    MeijerEvaluator(std::vector<std::complex<double>> a_front,
                    std::vector<std::complex<double>> a_back,
                    std::vector<std::complex<double>> b_front,
                    std::vector<std::complex<double>> b_back);
    ~MeijerEvaluator();
    MeijerEvaluator(MeijerEvaluator&&) noexcept;
    MeijerEvaluator& operator=(MeijerEvaluator&&) noexcept;

    /// Real-valued G at argument z > 0. The imaginary residue of the
    /// conjugate-pair arithmetic must satisfy |im| <= 1e-8 |re|.
    double operator()(double z) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// One-shot evaluation of a full spec.
double meijer_g(const MeijerGSpec& spec);

/// Independent oracle: numerical Mellin-Barnes contour integral of the
/// same spec (adaptive Gauss-Kronrod along a vertical line chosen inside
/// the pole-separating strip). Accuracy target 1e-10 scaled.
double mellin_barnes_check(const MeijerGSpec& spec);

} // namespace riscci::num
