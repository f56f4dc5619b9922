#include "w3pl/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace w3pl {

namespace {

void check_positive(double value, const char* name) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::domain_error(std::string(name) + " must be finite and > 0");
    }
}

}  // namespace

W3plParams::W3plParams(double kappa, double alpha, double beta)
    : kappa_(kappa), alpha_(alpha), beta_(beta) {
    check_positive(kappa, "kappa");
    check_positive(alpha, "alpha");
    check_positive(beta, "beta");
}

LinearParams3PL::LinearParams3PL(double kappa, double alpha, double beta)
    : kappa_(kappa), alpha_(alpha), beta_(beta) {
    check_positive(kappa, "kappa");
    check_positive(alpha, "alpha");
    check_positive(beta, "beta");
}

}  // namespace w3pl
