// Command-line toolkit for the wrapped three-parameter Lindley family:
// density summaries, mode analysis, seeded sampling, regularised fitting
// with model comparison, Monte Carlo recovery studies, and plot-ready grids.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "w3pl/io.hpp"
#include "w3pl/modality.hpp"
#include "w3pl/moments.hpp"
#include "w3pl/sampler.hpp"
#include "w3pl/study.hpp"

namespace {

using namespace w3pl;

struct DatasetFlags {
    std::string path;
    std::string unit = "radians";
    std::string column = "0";
    bool hour_counts = false;
};

void add_dataset_flags(CLI::App* cmd, DatasetFlags& flags, bool required = true) {
    auto* opt = cmd->add_option("--data", flags.path, "Dataset file (comma/whitespace "
                                "delimited, '#' comments skipped)");
    if (required) opt->required();
    cmd->add_option("--unit", flags.unit, "Input unit: radians, degrees or hours")
        ->check(CLI::IsMember({"radians", "degrees", "hours"}));
    cmd->add_option("--column", flags.column, "0-based column index or header name");
    cmd->add_flag("--hour-counts", flags.hour_counts,
                  "Rows are (hour, count) pairs expanded to observations");
}

DatasetSpec to_spec(const DatasetFlags& flags) {
    DatasetSpec spec;
    spec.path = flags.path;
    if (flags.unit == "degrees") {
        spec.unit = AngleUnit::Degrees;
    } else if (flags.unit == "hours") {
        spec.unit = AngleUnit::HourOfDay;
    } else {
        spec.unit = AngleUnit::Radians;
    }
    spec.column = flags.column;
    spec.hour_counts = flags.hour_counts;
    return spec;
}

std::vector<ModelFamily> parse_models(const std::vector<std::string>& names) {
    std::vector<ModelFamily> families;
    for (const std::string& name : names) {
        const std::optional<ModelFamily> family = parse_model_name(name);
        if (!family) {
            throw CLI::ValidationError("--models", "unknown model '" + name + "'");
        }
        families.push_back(*family);
    }
    return families;
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + out_path);
    }
    out << content;
}

int run(int argc, char** argv) {
    CLI::App app{"wrapped three-parameter Lindley circular distribution toolkit"};
    app.require_subcommand(1);
    // Let --seed/--format/--out appear after the subcommand name.
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out_path;
    app.add_option("--seed", seed, "Random seed (all commands are deterministic per seed)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "Output file (stdout when omitted)");

    double kappa = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    const auto add_param_flags = [&](CLI::App* cmd, bool required) {
        auto* k = cmd->add_option("--kappa", kappa, "Concentration parameter");
        auto* a = cmd->add_option("--alpha", alpha, "First shape parameter");
        auto* b = cmd->add_option("--beta", beta, "Second shape parameter");
        if (required) {
            k->required();
            a->required();
            b->required();
        }
    };

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "Fit models to a dataset and compare them");
    DatasetFlags fit_data;
    add_dataset_flags(fit_cmd, fit_data);
    std::vector<std::string> model_names{"w3pl", "wl", "wxl", "wexp"};
    fit_cmd->add_option("--models", model_names, "Model subset: w3pl wl wxl wexp")
        ->delimiter(',');
    double penalty_c = 0.5;
    int n_starts = 20;
    fit_cmd->add_option("--penalty-c", penalty_c, "Shrinkage constant c (weight c/n)");
    fit_cmd->add_option("--starts", n_starts, "Number of multistart points");
    std::vector<double> fixed_targets;
    fit_cmd->add_option("--fixed-targets", fixed_targets,
                        "Fixed shrinkage targets (alpha0 beta0) instead of per-start")
        ->expected(2);

    // sample
    auto* sample_cmd = app.add_subcommand("sample", "Draw from the distribution");
    add_param_flags(sample_cmd, true);
    int sample_n = 0;
    int grid_size = 4096;
    sample_cmd->add_option("--n", sample_n, "Number of draws")->required();
    sample_cmd->add_option("--grid-size", grid_size, "Inverse-CDF grid resolution");

    // summarize
    auto* summarize_cmd =
        app.add_subcommand("summarize", "Theoretical or empirical circular summaries");
    add_param_flags(summarize_cmd, false);
    DatasetFlags summarize_data;
    add_dataset_flags(summarize_cmd, summarize_data, false);

    // mode
    auto* mode_cmd = app.add_subcommand("mode", "Mode location and regime");
    add_param_flags(mode_cmd, true);

    // simulate
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo parameter-recovery study");
    add_param_flags(simulate_cmd, true);
    std::vector<int> sizes{50, 100, 250, 500};
    int replicates = 200;
    double sim_penalty_c = 0.5;
    int sim_starts = 20;
    int threads = 1;
    int sim_grid = 4096;
    simulate_cmd->add_option("--sizes", sizes, "Sample sizes")->delimiter(',');
    simulate_cmd->add_option("--replicates", replicates, "Replicates per sample size");
    simulate_cmd->add_option("--penalty-c", sim_penalty_c, "Shrinkage constant c");
    simulate_cmd->add_option("--starts", sim_starts, "Multistart points per fit");
    simulate_cmd->add_option("--threads", threads, "Worker threads (report-invariant)");
    simulate_cmd->add_option("--grid-size", sim_grid, "Inverse-CDF grid resolution");

    // plotdata
    auto* plot_cmd =
        app.add_subcommand("plotdata", "Density grid and histogram for fitted models");
    DatasetFlags plot_data;
    add_dataset_flags(plot_cmd, plot_data);
    std::vector<std::string> plot_model_names;
    plot_cmd->add_option("--models", plot_model_names, "Models to fit and evaluate")
        ->required()
        ->delimiter(',');
    int bins = 20;
    double plot_penalty_c = 0.5;
    int plot_starts = 20;
    plot_cmd->add_option("--bins", bins, "Histogram bin count");
    plot_cmd->add_option("--penalty-c", plot_penalty_c, "Shrinkage constant c");
    plot_cmd->add_option("--starts", plot_starts, "Multistart points per fit");

    app.parse(argc, argv);

    const bool json_format = format == "json";

    if (fit_cmd->parsed()) {
        const DatasetSpec spec = to_spec(fit_data);
        const CircularSample data = ingest(spec);
        PenaltyConfig penalty;
        penalty.c = penalty_c;
        if (!fixed_targets.empty()) {
            if (fixed_targets[0] <= 0.0 || fixed_targets[1] <= 0.0) {
                throw CLI::ValidationError("--fixed-targets", "targets must be > 0");
            }
            penalty.target_log_alpha = std::log(fixed_targets[0]);
            penalty.target_log_beta = std::log(fixed_targets[1]);
        }
        const ModelComparison comparison =
            fit_models(data, parse_models(model_names), penalty, n_starts, seed);
        FitReportMeta meta{spec, static_cast<int>(data.n()), seed, penalty_c, n_starts};
        emit(json_format ? fit_report_json(comparison, meta) : fit_report_csv(comparison),
             out_path);
        return 0;
    }

    if (sample_cmd->parsed()) {
        const W3plParams params(kappa, alpha, beta);
        const CircularSample draws = sample(params, sample_n, seed, grid_size);
        std::ostringstream out;
        write_sample(out, draws, params, seed);
        emit(out.str(), out_path);
        return 0;
    }

    if (summarize_cmd->parsed()) {
        const bool has_params = summarize_cmd->count("--kappa") > 0;
        const bool has_data = !summarize_data.path.empty();
        if (has_params == has_data) {
            throw CLI::ValidationError(
                "summarize", "provide either --kappa/--alpha/--beta or --data");
        }
        if (has_params) {
            const W3plParams params(kappa, alpha, beta);
            const ParamSummary summary{params, summary_measures(params), mode_of(params)};
            emit(json_format ? param_summary_json(summary) : param_summary_csv(summary),
                 out_path);
        } else {
            const SampleSummary summary = summarize_sample(ingest(to_spec(summarize_data)));
            emit(json_format ? sample_summary_json(summary) : sample_summary_csv(summary),
                 out_path);
        }
        return 0;
    }

    if (mode_cmd->parsed()) {
        const W3plParams params(kappa, alpha, beta);
        const ParamSummary summary{params, summary_measures(params), mode_of(params)};
        emit(json_format ? param_summary_json(summary) : param_summary_csv(summary),
             out_path);
        return 0;
    }

    if (simulate_cmd->parsed()) {
        StudyConfig config{W3plParams(kappa, alpha, beta),
                           sizes,
                           replicates,
                           PenaltyConfig{sim_penalty_c, std::nullopt, std::nullopt},
                           sim_starts,
                           seed,
                           sim_grid,
                           threads};
        const StudyReport report = run_study(config);
        emit(json_format ? study_report_json(report) : study_report_csv(report), out_path);
        return 0;
    }

    if (plot_cmd->parsed()) {
        const DatasetSpec spec = to_spec(plot_data);
        const CircularSample data = ingest(spec);
        PenaltyConfig penalty;
        penalty.c = plot_penalty_c;
        const std::vector<ModelFamily> families = parse_models(plot_model_names);
        const ModelComparison comparison =
            fit_models(data, families, penalty, plot_starts, seed);

        std::vector<ModelKind> fitted;
        for (const ModelFitRow& row : comparison.rows) {
            if (!row.ok) {
                throw std::runtime_error(std::string("fit failed for model ") +
                                         model_name(row.family) + ": " + row.error);
            }
            if (row.family == ModelFamily::W3pl) {
                fitted.emplace_back(W3plParams(row.kappa, *row.alpha, *row.beta));
            } else {
                fitted.emplace_back(row.family, row.kappa);
            }
        }
        const PlotGrid grid = make_plot_grid(fitted, &data, 512, bins);
        emit(json_format ? plot_grid_json(grid) : plot_grid_csv(grid), out_path);
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 handles --help and usage errors with its own exit codes.
        CLI::App app;
        return app.exit(e);
    } catch (const std::exception& e) {
        const char* kind = "runtime_error";
        if (dynamic_cast<const w3pl::IngestError*>(&e)) {
            kind = "ingest_error";
        } else if (dynamic_cast<const w3pl::FitError*>(&e)) {
            kind = "fit_error";
        } else if (dynamic_cast<const std::domain_error*>(&e)) {
            kind = "domain_error";
        } else if (dynamic_cast<const std::invalid_argument*>(&e)) {
            kind = "invalid_argument";
        }
        nlohmann::json error;
        error["error"] = kind;
        error["message"] = e.what();
        std::cerr << error.dump() << std::endl;
        return 1;
    }
}
