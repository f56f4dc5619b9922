#include "w3pl/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "w3pl/optimize.hpp"
#include "w3pl/rng.hpp"

namespace w3pl {

namespace {

constexpr double log_kappa_lo = -6.907755278982137;  // log(1e-3)
constexpr double log_kappa_hi = 6.907755278982137;   // log(1e3)
constexpr double log_shape_lo = -9.210340371976182;  // log(1e-4)
constexpr double log_shape_hi = 9.210340371976184;   // log(1e4)

double negative_log_likelihood_1p(ModelFamily family, double kappa,
                                  const CircularSample& sample) {
    double ll = 0.0;
    switch (family) {
        case ModelFamily::WrappedLindley:
            for (Angle t : sample) ll += std::log(wrapped_lindley_pdf(t, kappa));
            break;
        case ModelFamily::WrappedXlindley:
            for (Angle t : sample) ll += std::log(wrapped_xlindley_pdf(t, kappa));
            break;
        case ModelFamily::WrappedExponential:
            for (Angle t : sample) ll += std::log(wrapped_exponential_pdf(t, kappa));
            break;
        case ModelFamily::W3pl:
            throw std::domain_error("negative_log_likelihood_1p: not a one-parameter family");
    }
    return -ll;
}

}  // namespace

InformationCriteria information_criteria(double loglik, int k, int n) {
    if (k < 1 || n < 1) {
        throw std::domain_error("information_criteria: k and n must be >= 1");
    }
    InformationCriteria ic;
    ic.aic = 2.0 * k - 2.0 * loglik;
    ic.bic = std::log(static_cast<double>(n)) * k - 2.0 * loglik;
    if (n > k + 1) {
        ic.aicc = ic.aic + 2.0 * k * (k + 1.0) / (n - k - 1.0);
    }
    return ic;
}

double log_likelihood(const W3plParams& params, const CircularSample& sample) {
    const double k = params.kappa();
    const double a = params.alpha();
    const double b = params.beta();
    const double n = static_cast<double>(sample.n());
    const double omq = -std::expm1(-two_pi * k);
    const double q = std::exp(-two_pi * k);
    const double wrap = two_pi * b * q / omq;

    double sum_theta = 0.0;
    double sum_log_bracket = 0.0;
    for (Angle theta : sample) {
        sum_theta += theta.radians();
        sum_log_bracket += std::log(a + b * theta.radians() + wrap);
    }
    return 2.0 * n * std::log(k) - n * std::log(a * k + b) - k * sum_theta -
           n * std::log(omq) + sum_log_bracket;
}

double penalized_objective(const W3plParams& params, const CircularSample& sample,
                           const PenaltyConfig& penalty, double target_log_alpha,
                           double target_log_beta) {
    if (penalty.c < 0.0) {
        throw std::domain_error("penalized_objective: c must be >= 0");
    }
    const double lambda = penalty.c / static_cast<double>(sample.n());
    const double da = std::log(params.alpha()) - target_log_alpha;
    const double db = std::log(params.beta()) - target_log_beta;
    return -log_likelihood(params, sample) + lambda * da * da + lambda * db * db;
}

FitResult fit_w3pl(const CircularSample& sample, const FitOptions& options) {
    if (sample.n() < 4) {
        throw std::domain_error("fit_w3pl: need at least 4 observations");
    }
    if (options.explicit_starts.empty() && options.n_starts < 1) {
        throw std::domain_error("fit_w3pl: n_starts must be >= 1");
    }

    std::vector<std::array<double, 3>> start_points = options.explicit_starts;
    for (const auto& p0 : start_points) {
        for (double v : p0) {
            if (!std::isfinite(v) || v <= 0.0) {
                throw std::domain_error("fit_w3pl: explicit starts must be positive");
            }
        }
    }
    if (start_points.empty()) {
        start_points.reserve(static_cast<std::size_t>(options.n_starts));
        for (int s = 0; s < options.n_starts; ++s) {
            Xoshiro256pp rng(derive_stream(options.seed, {static_cast<std::uint64_t>(s)}));
            const double kappa0 = std::exp(rng.uniform(std::log(0.05), std::log(20.0)));
            const double alpha0 = std::exp(rng.uniform(std::log(0.1), std::log(50.0)));
            const double beta0 = std::exp(rng.uniform(std::log(0.1), std::log(50.0)));
            start_points.push_back({kappa0, alpha0, beta0});
        }
    }

    const BoxBounds box{{log_kappa_lo, log_shape_lo, log_shape_lo},
                        {log_kappa_hi, log_shape_hi, log_shape_hi}};

    std::vector<StartRecord> records;
    records.reserve(start_points.size());
    std::optional<std::size_t> best;

    for (std::size_t s = 0; s < start_points.size(); ++s) {
        const auto& p0 = start_points[s];
        const double target_log_alpha =
            options.penalty.target_log_alpha.value_or(std::log(p0[1]));
        const double target_log_beta =
            options.penalty.target_log_beta.value_or(std::log(p0[2]));

        const Objective objective = [&](const std::vector<double>& x) {
            const W3plParams params(std::exp(x[0]), std::exp(x[1]), std::exp(x[2]));
            return penalized_objective(params, sample, options.penalty, target_log_alpha,
                                       target_log_beta);
        };

        const OptimResult run = minimize_bounded(
            objective, {std::log(p0[0]), std::log(p0[1]), std::log(p0[2])}, box);

        StartRecord record;
        record.initial = p0;
        record.converged = {std::exp(run.x[0]), std::exp(run.x[1]), std::exp(run.x[2])};
        record.objective = run.value;
        record.converged_flag = run.converged;
        record.iterations = run.iterations;
        records.push_back(record);

        if (record.converged_flag &&
            (!best || record.objective < records[*best].objective)) {
            best = s;
        }
    }

    if (!best) {
        throw FitError("fit_w3pl: no start converged", std::move(records));
    }

    const StartRecord& winner = records[*best];
    const W3plParams estimate(winner.converged[0], winner.converged[1], winner.converged[2]);
    FitResult result{estimate,
                     log_likelihood(estimate, sample),
                     winner.objective,
                     static_cast<int>(sample.n()),
                     3,
                     {},
                     std::move(records),
                     *best};
    result.criteria = information_criteria(result.loglik, result.k, result.n);
    return result;
}

FitResult fit_w3pl(const CircularSample& sample, const PenaltyConfig& penalty, int n_starts,
                   std::uint64_t seed) {
    FitOptions options;
    options.penalty = penalty;
    options.n_starts = n_starts;
    options.seed = seed;
    return fit_w3pl(sample, options);
}

CompetitorFit fit_competitor(const CircularSample& sample, ModelFamily family) {
    if (family == ModelFamily::W3pl) {
        throw std::domain_error("fit_competitor: use fit_w3pl for the three-parameter model");
    }
    if (sample.n() < 3) {
        throw std::domain_error("fit_competitor: need at least 3 observations");
    }

    const Objective objective = [&](const std::vector<double>& x) {
        return negative_log_likelihood_1p(family, std::exp(x[0]), sample);
    };
    const BoxBounds box{{log_kappa_lo}, {log_kappa_hi}};

    constexpr int n_starts = 8;
    std::vector<StartRecord> records;
    std::optional<std::size_t> best;
    std::optional<OptimResult> best_run;

    for (int s = 0; s < n_starts; ++s) {
        const double frac = static_cast<double>(s) / (n_starts - 1);
        const double kappa0 =
            std::exp(std::log(0.01) + frac * (std::log(50.0) - std::log(0.01)));
        const OptimResult run = minimize_bounded(objective, {std::log(kappa0)}, box);

        StartRecord record;
        record.initial = {kappa0, 0.0, 0.0};
        record.converged = {std::exp(run.x[0]), 0.0, 0.0};
        record.objective = run.value;
        record.converged_flag = run.converged;
        record.iterations = run.iterations;
        records.push_back(record);

        if (run.converged && (!best || run.value < best_run->value)) {
            best = static_cast<std::size_t>(s);
            best_run = run;
        }
    }

    if (!best) {
        throw FitError("fit_competitor: no start converged", std::move(records));
    }

    const double kappa_hat = std::exp(best_run->x[0]);
    const double loglik = -best_run->value;
    return CompetitorFit{ModelKind(family, kappa_hat), loglik,
                         information_criteria(loglik, 1, static_cast<int>(sample.n()))};
}

ModelComparison fit_models(const CircularSample& sample,
                           const std::vector<ModelFamily>& families,
                           const PenaltyConfig& penalty, int n_starts, std::uint64_t seed) {
    if (families.empty()) {
        throw std::invalid_argument("fit_models: at least one model family is required");
    }

    ModelComparison comparison;
    comparison.n = static_cast<int>(sample.n());

    for (ModelFamily family : families) {
        ModelFitRow row;
        row.family = family;
        try {
            if (family == ModelFamily::W3pl) {
                const FitResult fit = fit_w3pl(sample, penalty, n_starts, seed);
                row.kappa = fit.params.kappa();
                row.alpha = fit.params.alpha();
                row.beta = fit.params.beta();
                row.loglik = fit.loglik;
                row.criteria = fit.criteria;
            } else {
                const CompetitorFit fit = fit_competitor(sample, family);
                row.kappa = fit.model.kappa();
                row.loglik = fit.loglik;
                row.criteria = fit.criteria;
            }
            row.ok = true;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        comparison.rows.push_back(std::move(row));
    }

    const auto argmin = [&](auto&& criterion) {
        std::optional<std::size_t> idx;
        double best_value = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < comparison.rows.size(); ++i) {
            const ModelFitRow& row = comparison.rows[i];
            if (!row.ok || !row.criteria) continue;
            const std::optional<double> value = criterion(*row.criteria);
            if (value && *value < best_value) {
                best_value = *value;
                idx = i;
            }
        }
        return idx;
    };

    comparison.best_aic = argmin([](const InformationCriteria& ic) {
        return std::optional<double>(ic.aic);
    });
    comparison.best_aicc = argmin([](const InformationCriteria& ic) { return ic.aicc; });
    comparison.best_bic = argmin([](const InformationCriteria& ic) {
        return std::optional<double>(ic.bic);
    });
    return comparison;
}

}  // namespace w3pl
