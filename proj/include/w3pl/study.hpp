#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "w3pl/inference.hpp"
#include "w3pl/params.hpp"

namespace w3pl {

struct StudyConfig {
    W3plParams true_params;
    std::vector<int> sample_sizes;
    int replicates = 200;
    PenaltyConfig penalty;
    int n_starts = 20;
    std::uint64_t seed = 0;
    int grid_size = 4096;
    int threads = 1;
};

struct BiasMse {
    double bias;
    double mse;
    double sd;  // sample standard deviation (0 for a single estimate)
};

/// bias = mean(estimate) - truth, mse = mean((estimate - truth)^2).
BiasMse bias_mse(const std::vector<double>& estimates, double truth);

struct StudyCell {
    int n;
    std::string parameter;  // "kappa", "alpha" or "beta"
    double estimate_mean;
    double estimate_sd;
    double bias;
    double mse;
    int replicates_used;
};

struct StudyGroupDiagnostics {
    int n;
    int failed_replicates;
};

struct StudyReport {
    StudyConfig config;
    std::vector<StudyCell> cells;  // three rows per sample size, in size order
    std::vector<StudyGroupDiagnostics> diagnostics;

    const StudyCell& cell(int n, const std::string& parameter) const;
};

/// Parameter-recovery experiment: for each sample size, draws `replicates`
/// independent samples from the true parameters, refits each, and
/// aggregates mean/SD/bias/MSE per parameter. Replicate r at sample-size
/// index j uses substreams derived from (seed, j, r), so reports are
/// identical for any `threads` value. Replicates whose fit fails entirely
/// are excluded from the aggregates and counted in the diagnostics.
StudyReport run_study(const StudyConfig& config);

}  // namespace w3pl
