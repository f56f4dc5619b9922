#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "w3pl/angle.hpp"
#include "w3pl/densities.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

/// Quadratic shrinkage on (log alpha, log beta) with weight c/n. Targets are
/// fixed when set; otherwise each multistart run shrinks toward its own
/// initial point.
struct PenaltyConfig {
    double c = 0.5;
    std::optional<double> target_log_alpha;
    std::optional<double> target_log_beta;
};

struct InformationCriteria {
    double aic = 0.0;
    std::optional<double> aicc;  // absent when n <= k + 1
    double bic = 0.0;
};

/// AIC = 2k - 2*LL, AICc = AIC + 2k(k+1)/(n-k-1), BIC = ln(n)*k - 2*LL.
InformationCriteria information_criteria(double loglik, int k, int n);

struct StartRecord {
    std::array<double, 3> initial;    // (kappa, alpha, beta) at the start point
    std::array<double, 3> converged;  // parameters where the run stopped
    double objective = 0.0;
    bool converged_flag = false;
    int iterations = 0;
};

struct FitResult {
    W3plParams params;
    double loglik;     // unpenalized log-likelihood at the estimate
    double objective;  // penalized objective at the estimate
    int n;
    int k;
    InformationCriteria criteria;
    std::vector<StartRecord> starts;
    std::size_t retained_start;
};

class FitError : public std::runtime_error {
public:
    FitError(const std::string& message, std::vector<StartRecord> starts)
        : std::runtime_error(message), starts_(std::move(starts)) {}

    const std::vector<StartRecord>& starts() const { return starts_; }

private:
    std::vector<StartRecord> starts_;
};

/// Log-likelihood of the three-parameter wrapped Lindley model:
///   2n log(kappa) - n log(alpha*kappa+beta) - kappa*sum(theta_i)
///     + sum_i log[(alpha + beta*theta_i)/(1-q) + 2*pi*beta*q/(1-q)^2].
double log_likelihood(const W3plParams& params, const CircularSample& sample);

/// Penalized objective Delta = -LL + (c/n)*[(log a - ta)^2 + (log b - tb)^2].
double penalized_objective(const W3plParams& params, const CircularSample& sample,
                           const PenaltyConfig& penalty, double target_log_alpha,
                           double target_log_beta);

struct FitOptions {
    PenaltyConfig penalty;
    int n_starts = 20;
    std::uint64_t seed = 0;
    /// When nonempty, replaces the random multistart points.
    std::vector<std::array<double, 3>> explicit_starts;
};

/// Multistart bounded quasi-Newton fit over (log kappa, log alpha, log beta).
/// Start points are drawn log-uniformly from kappa in [0.05, 20] and
/// alpha, beta in [0.1, 50]; the box bounds are kappa in [1e-3, 1e3] and
/// alpha, beta in [1e-4, 1e4]. The converged start with the lowest penalized
/// objective is retained (ties break to the lowest start index). Throws
/// FitError when no start converges.
FitResult fit_w3pl(const CircularSample& sample, const FitOptions& options);
FitResult fit_w3pl(const CircularSample& sample, const PenaltyConfig& penalty = {},
                   int n_starts = 20, std::uint64_t seed = 0);

struct CompetitorFit {
    ModelKind model;
    double loglik;
    InformationCriteria criteria;
};

/// Maximum-likelihood fit of a one-parameter competitor family over
/// log kappa, from 8 log-spaced starts across [0.01, 50].
CompetitorFit fit_competitor(const CircularSample& sample, ModelFamily family);

// --- Model comparison across families ---

struct ModelFitRow {
    ModelFamily family;
    bool ok = false;
    std::string error;
    double kappa = 0.0;
    std::optional<double> alpha;
    std::optional<double> beta;
    double loglik = 0.0;
    std::optional<InformationCriteria> criteria;
};

struct ModelComparison {
    std::vector<ModelFitRow> rows;
    std::optional<std::size_t> best_aic;
    std::optional<std::size_t> best_aicc;
    std::optional<std::size_t> best_bic;
    int n = 0;
};

/// Fits every requested family to the sample; a failure in one model is
/// recorded in its row without aborting the others. Best-model indices are
/// argmins over the rows where the criterion exists.
ModelComparison fit_models(const CircularSample& sample,
                           const std::vector<ModelFamily>& families,
                           const PenaltyConfig& penalty, int n_starts, std::uint64_t seed);

}  // namespace w3pl
