#pragma once

#include <complex>
#include <utility>

#include "w3pl/angle.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

/// Trigonometric moment of order p: direction mu_p, resultant length rho_p,
/// the noncentral components (a_p, b_p) = rho_p*(cos mu_p, sin mu_p), and the
/// central components taken about p times the mean direction.
struct TrigMomentSet {
    int order;
    double mu;
    double rho;
    double a;
    double b;
    double a_bar;
    double b_bar;
};

struct SummaryMeasures {
    double mean_direction;
    double circular_variance;
    double circular_deviation;
    double skewness;
    double kurtosis;
};

/// Characteristic function at integer order p >= 0:
///   kappa^2/(alpha*kappa+beta) * (alpha*(kappa-ip)+beta) / (kappa-ip)^2.
/// Exactly 1 at p = 0.
std::complex<double> characteristic_function(int p, const W3plParams& params);

TrigMomentSet trig_moments(int p, const W3plParams& params);

SummaryMeasures summary_measures(const W3plParams& params);

/// Summary measures of the one-parameter wrapped Lindley special case,
/// written out in its own closed forms rather than delegating to the
/// three-parameter path.
SummaryMeasures wl_summary_measures(double kappa);

/// Empirical trigonometric moments: ((1/n) sum cos(p*theta_i),
/// (1/n) sum sin(p*theta_i)).
std::pair<double, double> sample_trig_moments(const CircularSample& sample, int p);

}  // namespace w3pl
