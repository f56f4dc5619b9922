#include "w3pl/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace w3pl {

namespace {

double moment_direction(double p, double kappa, double alpha, double beta) {
    // Both arctangent arguments are positive for valid parameters, so the
    // single-argument form stays in the right half-plane.
    return 2.0 * std::atan(p / kappa) - std::atan(alpha * p / (alpha * kappa + beta));
}

double moment_resultant(double p, double kappa, double alpha, double beta) {
    const double denom = alpha * kappa + beta;
    return kappa * kappa / denom * std::hypot(denom, alpha * p) / (kappa * kappa + p * p);
}

}  // namespace

std::complex<double> characteristic_function(int p, const W3plParams& params) {
    if (p < 0) {
        throw std::domain_error("characteristic_function: order must be >= 0");
    }
    if (p == 0) {
        return {1.0, 0.0};
    }
    const double k = params.kappa();
    const std::complex<double> k_minus_ip(k, -static_cast<double>(p));
    const std::complex<double> numerator = params.alpha() * k_minus_ip + params.beta();
    return k * k / (params.alpha() * k + params.beta()) * numerator /
           (k_minus_ip * k_minus_ip);
}

TrigMomentSet trig_moments(int p, const W3plParams& params) {
    if (p < 1) {
        throw std::domain_error("trig_moments: order must be >= 1");
    }
    const double k = params.kappa();
    const double a = params.alpha();
    const double b = params.beta();
    const double pd = static_cast<double>(p);

    TrigMomentSet m;
    m.order = p;
    m.mu = moment_direction(pd, k, a, b);
    m.rho = moment_resultant(pd, k, a, b);
    m.a = m.rho * std::cos(m.mu);
    m.b = m.rho * std::sin(m.mu);
    const double mu1 = moment_direction(1.0, k, a, b);
    m.a_bar = m.rho * std::cos(m.mu - pd * mu1);
    m.b_bar = m.rho * std::sin(m.mu - pd * mu1);
    return m;
}

SummaryMeasures summary_measures(const W3plParams& params) {
    const TrigMomentSet m1 = trig_moments(1, params);
    const TrigMomentSet m2 = trig_moments(2, params);

    SummaryMeasures s;
    s.mean_direction = m1.mu;
    s.circular_variance = 1.0 - m1.rho;
    s.circular_deviation = std::sqrt(-2.0 * std::log(m1.rho));
    s.skewness = m2.b_bar / std::pow(s.circular_variance, 1.5);
    s.kurtosis = (m2.a_bar - std::pow(m1.rho, 4.0)) /
                 (s.circular_variance * s.circular_variance);
    return s;
}

SummaryMeasures wl_summary_measures(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::domain_error("wl_summary_measures: kappa must be finite and > 0");
    }
    // The special-case closed forms, with alpha*kappa + beta collapsed to
    // kappa + 1. The expression shapes mirror the general path so the two
    // routes agree to the last bit even where 1/V0^2 amplifies rounding.
    const double k = kappa;
    const double mu1 = 2.0 * std::atan(1.0 / k) - std::atan(1.0 / (k + 1.0));
    const double rho1 = k * k / (k + 1.0) * std::hypot(k + 1.0, 1.0) / (k * k + 1.0);
    const double v0 = 1.0 - rho1;

    const double mu2 = 2.0 * std::atan(2.0 / k) - std::atan(2.0 / (k + 1.0));
    const double rho2 = k * k / (k + 1.0) * std::hypot(k + 1.0, 2.0) / (k * k + 4.0);
    const double a2_bar = rho2 * std::cos(mu2 - 2.0 * mu1);
    const double b2_bar = rho2 * std::sin(mu2 - 2.0 * mu1);

    SummaryMeasures s;
    s.mean_direction = mu1;
    s.circular_variance = v0;
    s.circular_deviation = std::sqrt(-2.0 * std::log(rho1));
    s.skewness = b2_bar / std::pow(v0, 1.5);
    s.kurtosis = (a2_bar - std::pow(rho1, 4.0)) / (v0 * v0);
    return s;
}

std::pair<double, double> sample_trig_moments(const CircularSample& sample, int p) {
    if (p < 1) {
        throw std::domain_error("sample_trig_moments: order must be >= 1");
    }
    double sum_cos = 0.0;
    double sum_sin = 0.0;
    for (Angle theta : sample) {
        sum_cos += std::cos(p * theta.radians());
        sum_sin += std::sin(p * theta.radians());
    }
    const double n = static_cast<double>(sample.n());
    return {sum_cos / n, sum_sin / n};
}

}  // namespace w3pl
