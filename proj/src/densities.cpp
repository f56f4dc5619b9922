#include "w3pl/densities.hpp"

#include <cmath>
#include <stdexcept>

namespace w3pl {

namespace {

void check_kappa(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::domain_error("kappa must be finite and > 0");
    }
}

// 1 - exp(-2*pi*kappa), computed without cancellation for small kappa.
double one_minus_q(double kappa) {
    return -std::expm1(-two_pi * kappa);
}

void check_cdf_arg(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > two_pi) {
        throw std::domain_error("cdf argument must lie in [0, 2*pi]");
    }
}

}  // namespace

double linear_3pl_pdf(double x, const LinearParams3PL& p) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("linear_3pl_pdf: x must be finite and >= 0");
    }
    const double k = p.kappa();
    return k * k / (p.alpha() * k + p.beta()) * (p.alpha() + p.beta() * x) * std::exp(-k * x);
}

double linear_3pl_cdf(double x, const LinearParams3PL& p) {
    if (!std::isfinite(x) || x < 0.0) {
        throw std::domain_error("linear_3pl_cdf: x must be finite and >= 0");
    }
    const double k = p.kappa();
    const double denom = p.alpha() * k + p.beta();
    return 1.0 - (1.0 + k * p.beta() * x / denom) * std::exp(-k * x);
}

double w3pl_pdf(Angle theta, const W3plParams& p) {
    const double k = p.kappa();
    const double t = theta.radians();
    const double denom = p.alpha() * k + p.beta();
    const double omq = one_minus_q(k);
    const double q = std::exp(-two_pi * k);
    // For kappa large enough that q underflows, this degrades to the
    // unwrapped density restricted to [0, 2*pi), which is the right limit.
    const double bracket = p.alpha() + p.beta() * t + two_pi * p.beta() * q / omq;
    return k * k / denom * std::exp(-k * t) / omq * bracket;
}

double w3pl_cdf(double theta, const W3plParams& p) {
    check_cdf_arg(theta);
    const double k = p.kappa();
    const double denom = p.alpha() * k + p.beta();
    const double omq = one_minus_q(k);
    const double q = std::exp(-two_pi * k);
    const double one_minus_et = -std::expm1(-k * theta);
    const double et = std::exp(-k * theta);
    const double main_term = (one_minus_et - k * p.beta() * theta / denom * et) / omq;
    const double wrap_term = two_pi * k * p.beta() / denom * one_minus_et * q / (omq * omq);
    return main_term + wrap_term;
}

double wrapped_lindley_pdf(Angle theta, double kappa) {
    check_kappa(kappa);
    const double t = theta.radians();
    const double omq = one_minus_q(kappa);
    const double q = std::exp(-two_pi * kappa);
    return kappa * kappa / (1.0 + kappa) * std::exp(-kappa * t) *
           ((1.0 + t) / omq + two_pi * q / (omq * omq));
}

double wrapped_lindley_cdf(double theta, double kappa) {
    check_kappa(kappa);
    check_cdf_arg(theta);
    const double omq = one_minus_q(kappa);
    const double q = std::exp(-two_pi * kappa);
    const double one_minus_et = -std::expm1(-kappa * theta);
    const double et = std::exp(-kappa * theta);
    return (one_minus_et - kappa * theta * et / (kappa + 1.0)) / omq +
           two_pi * kappa / (kappa + 1.0) * one_minus_et * q / (omq * omq);
}

double wrapped_xlindley_pdf(Angle theta, double kappa) {
    check_kappa(kappa);
    const double t = theta.radians();
    const double omq = one_minus_q(kappa);
    const double q = std::exp(-two_pi * kappa);
    const double kp1 = kappa + 1.0;
    return kappa * kappa * std::exp(-t * kappa) / (kp1 * kp1 * omq * omq) *
           (omq * (kappa + t + 2.0) + two_pi * q);
}

double wrapped_exponential_pdf(Angle theta, double kappa) {
    check_kappa(kappa);
    return kappa * std::exp(-kappa * theta.radians()) / one_minus_q(kappa);
}

double wrapped_exponential_cdf(double theta, double kappa) {
    check_kappa(kappa);
    check_cdf_arg(theta);
    return -std::expm1(-kappa * theta) / one_minus_q(kappa);
}

InvarianceTransform::InvarianceTransform(int delta, Angle epsilon)
    : delta_(delta), epsilon_(epsilon) {
    if (delta != 1 && delta != -1) {
        throw std::domain_error("InvarianceTransform: delta must be -1 or +1");
    }
}

double transformed_pdf(Angle theta_star, const InvarianceTransform& t, const W3plParams& p) {
    const double pulled_back = t.delta() * theta_star.radians() - t.epsilon().radians();
    return w3pl_pdf(normalize_angle(pulled_back), p);
}

const char* model_name(ModelFamily family) {
    switch (family) {
        case ModelFamily::W3pl: return "w3pl";
        case ModelFamily::WrappedLindley: return "wl";
        case ModelFamily::WrappedXlindley: return "wxl";
        case ModelFamily::WrappedExponential: return "wexp";
    }
    return "unknown";
}

std::optional<ModelFamily> parse_model_name(const std::string& name) {
    if (name == "w3pl") return ModelFamily::W3pl;
    if (name == "wl") return ModelFamily::WrappedLindley;
    if (name == "wxl") return ModelFamily::WrappedXlindley;
    if (name == "wexp") return ModelFamily::WrappedExponential;
    return std::nullopt;
}

int model_parameter_count(ModelFamily family) {
    return family == ModelFamily::W3pl ? 3 : 1;
}

ModelKind::ModelKind(const W3plParams& params)
    : family_(ModelFamily::W3pl), params_(params) {}

ModelKind::ModelKind(ModelFamily family, double kappa)
    : family_(family), params_(kappa) {
    if (family == ModelFamily::W3pl) {
        throw std::domain_error("ModelKind: the three-parameter family needs a full triple");
    }
    check_kappa(kappa);
}

double ModelKind::kappa() const {
    if (family_ == ModelFamily::W3pl) return std::get<W3plParams>(params_).kappa();
    return std::get<double>(params_);
}

const W3plParams& ModelKind::w3pl() const {
    if (family_ != ModelFamily::W3pl) {
        throw std::domain_error("ModelKind: not a three-parameter model");
    }
    return std::get<W3plParams>(params_);
}

double ModelKind::pdf(Angle theta) const {
    switch (family_) {
        case ModelFamily::W3pl: return w3pl_pdf(theta, std::get<W3plParams>(params_));
        case ModelFamily::WrappedLindley: return wrapped_lindley_pdf(theta, kappa());
        case ModelFamily::WrappedXlindley: return wrapped_xlindley_pdf(theta, kappa());
        case ModelFamily::WrappedExponential: return wrapped_exponential_pdf(theta, kappa());
    }
    throw std::logic_error("ModelKind: unreachable");
}

}  // namespace w3pl
