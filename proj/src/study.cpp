#include "w3pl/study.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "w3pl/rng.hpp"
#include "w3pl/sampler.hpp"

namespace w3pl {

BiasMse bias_mse(const std::vector<double>& estimates, double truth) {
    if (estimates.empty()) {
        throw std::domain_error("bias_mse: estimates must be nonempty");
    }
    const double n = static_cast<double>(estimates.size());
    double sum = 0.0;
    double sum_sq_dev = 0.0;
    for (double e : estimates) {
        sum += e - truth;
        sum_sq_dev += (e - truth) * (e - truth);
    }
    const double bias = sum / n;
    const double mse = sum_sq_dev / n;

    double sd = 0.0;
    if (estimates.size() > 1) {
        const double mean = truth + bias;
        double ss = 0.0;
        for (double e : estimates) ss += (e - mean) * (e - mean);
        sd = std::sqrt(ss / (n - 1.0));
    }
    return {bias, mse, sd};
}

const StudyCell& StudyReport::cell(int n, const std::string& parameter) const {
    for (const StudyCell& c : cells) {
        if (c.n == n && c.parameter == parameter) return c;
    }
    throw std::out_of_range("StudyReport::cell: no such (n, parameter) row");
}

StudyReport run_study(const StudyConfig& config) {
    if (config.replicates < 1) {
        throw std::domain_error("run_study: replicates must be >= 1");
    }
    if (config.sample_sizes.empty()) {
        throw std::domain_error("run_study: sample_sizes must be nonempty");
    }
    for (int n : config.sample_sizes) {
        if (n < 4) throw std::domain_error("run_study: every sample size must be >= 4");
    }

    const InverseCdfTable table = build_inverse_table(config.true_params, config.grid_size);
    StudyReport report{config, {}, {}};

    for (std::size_t j = 0; j < config.sample_sizes.size(); ++j) {
        const int n = config.sample_sizes[j];
        std::vector<std::optional<std::array<double, 3>>> estimates(
            static_cast<std::size_t>(config.replicates));

        const auto run_replicate = [&](int r) {
            const auto jr = static_cast<std::uint64_t>(j);
            const auto rr = static_cast<std::uint64_t>(r);
            const CircularSample data =
                sample(table, n, derive_stream(config.seed, {jr, rr, 0}));
            FitOptions options;
            options.penalty = config.penalty;
            options.n_starts = config.n_starts;
            options.seed = derive_stream(config.seed, {jr, rr, 1});
            try {
                const FitResult fit = fit_w3pl(data, options);
                estimates[static_cast<std::size_t>(r)] = {
                    fit.params.kappa(), fit.params.alpha(), fit.params.beta()};
            } catch (const FitError&) {
                estimates[static_cast<std::size_t>(r)] = std::nullopt;
            }
        };

        const int threads = std::max(1, config.threads);
        if (threads == 1) {
            for (int r = 0; r < config.replicates; ++r) run_replicate(r);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(threads));
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&, t] {
                    for (int r = t; r < config.replicates; r += threads) run_replicate(r);
                });
            }
            for (std::thread& worker : pool) worker.join();
        }

        std::array<std::vector<double>, 3> per_parameter;
        int failed = 0;
        for (const auto& estimate : estimates) {
            if (!estimate) {
                ++failed;
                continue;
            }
            for (std::size_t p = 0; p < 3; ++p) per_parameter[p].push_back((*estimate)[p]);
        }
        report.diagnostics.push_back({n, failed});
        if (per_parameter[0].empty()) {
            throw std::runtime_error("run_study: every replicate failed at n=" +
                                     std::to_string(n));
        }

        const std::array<std::pair<const char*, double>, 3> truths{{
            {"kappa", config.true_params.kappa()},
            {"alpha", config.true_params.alpha()},
            {"beta", config.true_params.beta()},
        }};
        for (std::size_t p = 0; p < 3; ++p) {
            const BiasMse stats = bias_mse(per_parameter[p], truths[p].second);
            report.cells.push_back({n, truths[p].first, truths[p].second + stats.bias,
                                    stats.sd, stats.bias, stats.mse,
                                    static_cast<int>(per_parameter[p].size())});
        }
    }
    return report;
}

}  // namespace w3pl
