#pragma once

#include <stdexcept>

#include "w3pl/angle.hpp"

namespace w3pl {

/// Truncated wrapping sum: sum_{m=0}^{terms-1} f(theta + 2*pi*m) for a
/// density f on (0, inf). This is the brute-force reference against which
/// the closed-form circular densities are validated. For a density with an
/// exp(-kappa*x) factor the partial sums converge geometrically with ratio
/// exp(-2*pi*kappa).
template <typename F>
double wrap_sum_pdf_oracle(Angle theta, F&& linear_pdf, int terms) {
    if (terms < 1) {
        throw std::domain_error("wrap_sum_pdf_oracle: terms must be >= 1");
    }
    double sum = 0.0;
    for (int m = 0; m < terms; ++m) {
        sum += linear_pdf(theta.radians() + two_pi * static_cast<double>(m));
    }
    return sum;
}

/// Number of terms that keeps the omitted tail of the wrapping sum below
/// 1e-16 relative for an exp(-kappa*x) tail: ceil(16*ln(10)/(2*pi*kappa)) + 5.
int default_wrap_terms(double kappa);

}  // namespace w3pl
