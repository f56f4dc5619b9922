#include "w3pl/modality.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace w3pl {

double s_of_kappa(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::domain_error("s_of_kappa: kappa must be finite and > 0");
    }
    // expm1 keeps the second term accurate for small kappa; for large kappa
    // it overflows to inf and the term cleanly vanishes.
    return 1.0 / kappa - two_pi / std::expm1(two_pi * kappa);
}

double solve_kappa_cutoff(double r) {
    if (!std::isfinite(r) || r <= 0.0 || r >= std::numbers::pi) {
        throw std::domain_error("solve_kappa_cutoff: r must lie in (0, pi)");
    }

    // S is strictly decreasing, so bracket with S(lo) > r > S(hi). The
    // nominal bracket [1e-8, 60] covers r in about (0.017, pi - 3e-8);
    // widen it geometrically for r outside that band.
    double lo = 1e-8;
    double hi = 60.0;
    while (s_of_kappa(lo) < r && lo > 1e-300) lo *= 0.5;
    while (s_of_kappa(hi) > r && hi < 1e300) hi *= 2.0;

    double log_lo = std::log(lo);
    double log_hi = std::log(hi);
    double mid = 0.5 * (log_lo + log_hi);
    for (int i = 0; i < 200; ++i) {
        mid = 0.5 * (log_lo + log_hi);
        const double s_mid = s_of_kappa(std::exp(mid));
        if (std::abs(s_mid - r) < 1e-13) break;
        if (s_mid > r) {
            log_lo = mid;
        } else {
            log_hi = mid;
        }
        if (log_hi - log_lo < 1e-15) break;
    }
    return std::exp(mid);
}

ModeResult mode_of(const W3plParams& params) {
    const double r = params.alpha() / params.beta();
    ModeResult result{ModeRegime::Boundary, Angle(0.0), std::nullopt};
    if (r >= std::numbers::pi) {
        return result;
    }
    result.kappa_cutoff = solve_kappa_cutoff(r);
    if (params.kappa() >= *result.kappa_cutoff) {
        return result;
    }
    result.regime = ModeRegime::Interior;
    result.location = Angle(s_of_kappa(params.kappa()) - r);
    return result;
}

double pdf_derivative(Angle theta, const W3plParams& params) {
    const double k = params.kappa();
    const double a = params.alpha();
    const double b = params.beta();
    const double t = theta.radians();
    const double omq = -std::expm1(-two_pi * k);
    const double q = std::exp(-two_pi * k);
    const double scale = k * k / ((a * k + b) * omq);
    const double wrap = two_pi * b * q / omq;
    return scale * std::exp(-k * t) * (b - k * (a + b * t + wrap));
}

}  // namespace w3pl
