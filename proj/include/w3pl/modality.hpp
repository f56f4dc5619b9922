#pragma once

#include <optional>

#include "w3pl/angle.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

enum class ModeRegime { Interior, Boundary };

/// Where the density attains its maximum. location is 0 in the Boundary
/// regime. kappa_cutoff carries the concentration threshold separating the
/// two regimes; it exists only when r = alpha/beta < pi, since no interior
/// mode is possible otherwise.
struct ModeResult {
    ModeRegime regime;
    Angle location;
    std::optional<double> kappa_cutoff;
};

/// S(kappa) = 1/kappa - 2*pi/(exp(2*pi*kappa) - 1): strictly decreasing,
/// mapping (0, inf) onto (0, pi).
double s_of_kappa(double kappa);

/// The unique kappa_r > 0 with S(kappa_r) = r, for r in (0, pi). Bisection
/// in log(kappa); |S(kappa_r) - r| < 1e-10 on return.
double solve_kappa_cutoff(double r);

/// Interior mode at S(kappa) - alpha/beta when kappa < kappa_r and
/// alpha/beta < pi; boundary mode at 0 otherwise (ties classify as Boundary).
ModeResult mode_of(const W3plParams& params);

/// Analytic d/dtheta of the wrapped three-parameter Lindley density.
double pdf_derivative(Angle theta, const W3plParams& params);

}  // namespace w3pl
