#pragma once

#include <optional>
#include <string>
#include <variant>

#include "w3pl/angle.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

// --- Unwrapped three-parameter Lindley law on [0, inf) ---

double linear_3pl_pdf(double x, const LinearParams3PL& p);
double linear_3pl_cdf(double x, const LinearParams3PL& p);

// --- Wrapped three-parameter Lindley law on [0, 2*pi) ---

/// Density of the wrapped three-parameter Lindley distribution:
///   kappa^2/(alpha*kappa+beta) * exp(-kappa*theta)/(1-q)
///     * [alpha + beta*theta + 2*pi*beta*q/(1-q)],   q = exp(-2*pi*kappa).
/// Strictly positive on [0, 2*pi).
double w3pl_pdf(Angle theta, const W3plParams& p);

/// Distribution function on the closed interval [0, 2*pi]; theta = 2*pi is
/// admitted and maps to 1. Throws std::domain_error outside [0, 2*pi].
double w3pl_cdf(double theta, const W3plParams& p);

// --- One-parameter competitor models ---

double wrapped_lindley_pdf(Angle theta, double kappa);
double wrapped_lindley_cdf(double theta, double kappa);

double wrapped_xlindley_pdf(Angle theta, double kappa);

double wrapped_exponential_pdf(Angle theta, double kappa);
double wrapped_exponential_cdf(double theta, double kappa);

// --- Rotated/reflected family ---

/// Orientation flip (delta in {-1,+1}) combined with an initial-direction
/// shift epsilon. The transformed variable is delta*(Theta + epsilon).
class InvarianceTransform {
public:
    InvarianceTransform(int delta, Angle epsilon);

    int delta() const { return delta_; }
    Angle epsilon() const { return epsilon_; }

private:
    int delta_;
    Angle epsilon_;
};

/// Density of the transformed variable: the base density evaluated at
/// delta*theta_star - epsilon, reduced modulo 2*pi.
double transformed_pdf(Angle theta_star, const InvarianceTransform& t, const W3plParams& p);

// --- Model tags for fitting and comparison ---

enum class ModelFamily { W3pl, WrappedLindley, WrappedXlindley, WrappedExponential };

/// Short stable names used in CLI flags and report columns:
/// "w3pl", "wl", "wxl", "wexp".
const char* model_name(ModelFamily family);
std::optional<ModelFamily> parse_model_name(const std::string& name);
int model_parameter_count(ModelFamily family);

/// A concrete model: a family tag plus its parameters (a full triple for the
/// three-parameter family, a single concentration for the others).
class ModelKind {
public:
    explicit ModelKind(const W3plParams& params);
    ModelKind(ModelFamily family, double kappa);

    ModelFamily family() const { return family_; }
    int parameter_count() const { return model_parameter_count(family_); }

    /// Concentration parameter; defined for every family.
    double kappa() const;
    /// Full parameter triple; throws unless family() == ModelFamily::W3pl.
    const W3plParams& w3pl() const;

    double pdf(Angle theta) const;

private:
    ModelFamily family_;
    std::variant<W3plParams, double> params_;
};

}  // namespace w3pl
