#include "w3pl/wrapping.hpp"

#include <cmath>

namespace w3pl {

int default_wrap_terms(double kappa) {
    if (!std::isfinite(kappa) || kappa <= 0.0) {
        throw std::domain_error("default_wrap_terms: kappa must be finite and > 0");
    }
    const double terms = std::ceil(16.0 * std::log(10.0) / (two_pi * kappa)) + 5.0;
    return static_cast<int>(terms);
}

}  // namespace w3pl
