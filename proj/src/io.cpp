#include "w3pl/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace w3pl {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& token, long row) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(value)) {
        throw IngestError("cannot parse number '" + token + "'", row);
    }
    return value;
}

long parse_integer(const std::string& token, long row) {
    errno = 0;
    char* end = nullptr;
    const long value = std::strtol(token.c_str(), &end, 10);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE) {
        throw IngestError("cannot parse integer '" + token + "'", row);
    }
    return value;
}

Angle convert(double raw, AngleUnit unit, long row) {
    switch (unit) {
        case AngleUnit::Radians:
            return normalize_angle(raw);
        case AngleUnit::Degrees:
            return degrees_to_radians(raw);
        case AngleUnit::HourOfDay: {
            const double rounded = std::round(raw);
            if (rounded != raw || rounded < 0.0 || rounded > 23.0) {
                throw IngestError("hour must be an integer in 0..23", row);
            }
            return angle_from_hour(static_cast<int>(rounded));
        }
    }
    throw IngestError("unknown angle unit", row);
}

json criteria_json(const std::optional<InformationCriteria>& criteria) {
    if (!criteria) return nullptr;
    json j;
    j["aic"] = criteria->aic;
    j["aicc"] = criteria->aicc ? json(*criteria->aicc) : json(nullptr);
    j["bic"] = criteria->bic;
    return j;
}

std::string best_name(const ModelComparison& comparison,
                      const std::optional<std::size_t>& index) {
    return index ? model_name(comparison.rows[*index].family) : "";
}

}  // namespace

std::vector<DelimitedRow> read_delimited(std::istream& in) {
    std::vector<DelimitedRow> rows;
    std::string line;
    long line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        for (char& c : line) {
            if (c == ',' || c == '\t' || c == ';') c = ' ';
        }
        DelimitedRow row{line_number, {}};
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) row.fields.push_back(token);
        rows.push_back(std::move(row));
    }
    return rows;
}

CircularSample ingest(const DatasetSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) {
        throw IngestError("cannot open dataset file: " + spec.path);
    }
    std::vector<DelimitedRow> rows = read_delimited(in);
    if (rows.empty()) {
        throw IngestError("dataset is empty: " + spec.path);
    }

    std::size_t column = 0;
    std::size_t first_data_row = 0;
    char* end = nullptr;
    const long parsed = std::strtol(spec.column.c_str(), &end, 10);
    if (end != spec.column.c_str() && *end == '\0' && parsed >= 0) {
        column = static_cast<std::size_t>(parsed);
    } else {
        // Named column: the first row is a header.
        const DelimitedRow& header = rows.front();
        bool found = false;
        for (std::size_t i = 0; i < header.fields.size(); ++i) {
            if (header.fields[i] == spec.column) {
                column = i;
                found = true;
                break;
            }
        }
        if (!found) {
            throw IngestError("column '" + spec.column + "' not found in header",
                              header.line);
        }
        first_data_row = 1;
    }

    std::vector<Angle> angles;
    for (std::size_t i = first_data_row; i < rows.size(); ++i) {
        const DelimitedRow& row = rows[i];
        if (spec.hour_counts) {
            if (row.fields.size() < 2) {
                throw IngestError("hour-count rows need (hour, count)", row.line);
            }
            const long hour = parse_integer(row.fields[0], row.line);
            const long count = parse_integer(row.fields[1], row.line);
            if (hour < 0 || hour > 23) {
                throw IngestError("hour must be in 0..23", row.line);
            }
            if (count < 0) {
                throw IngestError("count must be >= 0", row.line);
            }
            const Angle angle = angle_from_hour(static_cast<int>(hour));
            for (long c = 0; c < count; ++c) angles.push_back(angle);
        } else {
            if (column >= row.fields.size()) {
                throw IngestError("row has no column " + std::to_string(column), row.line);
            }
            angles.push_back(convert(parse_double(row.fields[column], row.line), spec.unit,
                                     row.line));
        }
    }
    if (angles.empty()) {
        throw IngestError("dataset produced no observations: " + spec.path);
    }
    return CircularSample(std::move(angles),
                          spec.hour_counts ? AngleUnit::HourOfDay : spec.unit);
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_sample(std::ostream& out, const CircularSample& sample,
                  const W3plParams& params, std::uint64_t seed) {
    out << "# w3pl sample kappa=" << format_double(params.kappa())
        << " alpha=" << format_double(params.alpha())
        << " beta=" << format_double(params.beta()) << " n=" << sample.n()
        << " seed=" << seed << "\n";
    for (Angle theta : sample) {
        out << format_double(theta.radians()) << "\n";
    }
}

PlotGrid make_plot_grid(const std::vector<ModelKind>& models,
                        const CircularSample* sample_or_null, int grid_points, int bins) {
    if (models.empty()) {
        throw std::invalid_argument("make_plot_grid: at least one model is required");
    }
    if (grid_points < 2 || bins < 1) {
        throw std::invalid_argument("make_plot_grid: bad grid_points or bins");
    }

    PlotGrid grid;
    grid.thetas.resize(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        grid.thetas[static_cast<std::size_t>(i)] = two_pi * i / grid_points;
    }
    for (const ModelKind& model : models) {
        std::vector<double> values;
        values.reserve(grid.thetas.size());
        for (double theta : grid.thetas) {
            values.push_back(model.pdf(Angle(theta)));
        }
        grid.densities.emplace_back(model_name(model.family()), std::move(values));
    }

    if (sample_or_null) {
        grid.histogram_edges.resize(static_cast<std::size_t>(bins) + 1);
        grid.histogram_counts.assign(static_cast<std::size_t>(bins), 0);
        for (int b = 0; b <= bins; ++b) {
            grid.histogram_edges[static_cast<std::size_t>(b)] = two_pi * b / bins;
        }
        for (Angle theta : *sample_or_null) {
            auto bin = static_cast<std::size_t>(theta.radians() / (two_pi / bins));
            if (bin >= static_cast<std::size_t>(bins)) bin = static_cast<std::size_t>(bins) - 1;
            ++grid.histogram_counts[bin];
        }
    }
    return grid;
}

std::string plot_grid_csv(const PlotGrid& grid) {
    std::ostringstream out;
    out << "theta";
    for (const auto& [name, values] : grid.densities) out << "," << name;
    const bool with_histogram = !grid.histogram_edges.empty();
    if (with_histogram) out << ",hist_left,hist_right,hist_count";
    out << "\n";

    const std::size_t bins = grid.histogram_counts.size();
    for (std::size_t i = 0; i < grid.thetas.size(); ++i) {
        out << format_double(grid.thetas[i]);
        for (const auto& [name, values] : grid.densities) out << "," << format_double(values[i]);
        if (with_histogram) {
            if (i < bins) {
                out << "," << format_double(grid.histogram_edges[i]) << ","
                    << format_double(grid.histogram_edges[i + 1]) << ","
                    << grid.histogram_counts[i];
            } else {
                out << ",,,";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string plot_grid_json(const PlotGrid& grid) {
    json j;
    j["theta"] = grid.thetas;
    json densities = json::object();
    for (const auto& [name, values] : grid.densities) densities[name] = values;
    j["densities"] = densities;
    if (!grid.histogram_edges.empty()) {
        j["histogram"]["edges"] = grid.histogram_edges;
        j["histogram"]["counts"] = grid.histogram_counts;
    }
    return j.dump(2) + "\n";
}

std::string fit_report_csv(const ModelComparison& comparison) {
    std::ostringstream out;
    out << "model,kappa,alpha,beta,loglik,aic,aicc,bic,best_aic,best_aicc,best_bic,error\n";
    for (std::size_t i = 0; i < comparison.rows.size(); ++i) {
        const ModelFitRow& row = comparison.rows[i];
        out << model_name(row.family) << ",";
        if (row.ok) {
            out << format_double(row.kappa) << ",";
            out << (row.alpha ? format_double(*row.alpha) : "") << ",";
            out << (row.beta ? format_double(*row.beta) : "") << ",";
            out << format_double(row.loglik) << ",";
            out << format_double(row.criteria->aic) << ",";
            out << (row.criteria->aicc ? format_double(*row.criteria->aicc) : "") << ",";
            out << format_double(row.criteria->bic) << ",";
            out << (comparison.best_aic == i ? "1" : "0") << ",";
            out << (comparison.best_aicc == i ? "1" : "0") << ",";
            out << (comparison.best_bic == i ? "1" : "0") << ",";
        } else {
            out << ",,,,,,,,,," << row.error;
        }
        out << "\n";
    }
    return out.str();
}

std::string fit_report_json(const ModelComparison& comparison, const FitReportMeta& meta) {
    json j;
    j["n"] = comparison.n;
    j["seed"] = meta.seed;
    j["penalty_c"] = meta.penalty_c;
    j["n_starts"] = meta.n_starts;
    if (meta.dataset) {
        j["dataset"]["path"] = meta.dataset->path;
        j["dataset"]["source_unit"] = angle_unit_name(meta.dataset->unit);
        j["dataset"]["hour_counts"] = meta.dataset->hour_counts;
        if (meta.dataset_n) j["dataset"]["n"] = *meta.dataset_n;
    }

    json models = json::object();
    for (const ModelFitRow& row : comparison.rows) {
        json m;
        if (row.ok) {
            m["kappa"] = row.kappa;
            if (row.alpha) m["alpha"] = *row.alpha;
            if (row.beta) m["beta"] = *row.beta;
            m["loglik"] = row.loglik;
            m["criteria"] = criteria_json(row.criteria);
        } else {
            m["error"] = row.error;
        }
        models[model_name(row.family)] = m;
    }
    j["models"] = models;
    j["best"]["aic"] = best_name(comparison, comparison.best_aic);
    j["best"]["aicc"] = best_name(comparison, comparison.best_aicc);
    j["best"]["bic"] = best_name(comparison, comparison.best_bic);
    return j.dump(2) + "\n";
}

std::string study_report_csv(const StudyReport& report) {
    std::ostringstream out;
    out << "n,parameter,estimate,sd,bias,mse,replicates_used\n";
    for (const StudyCell& cell : report.cells) {
        out << cell.n << "," << cell.parameter << "," << format_double(cell.estimate_mean)
            << "," << format_double(cell.estimate_sd) << "," << format_double(cell.bias)
            << "," << format_double(cell.mse) << "," << cell.replicates_used << "\n";
    }
    return out.str();
}

std::string study_report_json(const StudyReport& report) {
    json j;
    j["true_params"]["kappa"] = report.config.true_params.kappa();
    j["true_params"]["alpha"] = report.config.true_params.alpha();
    j["true_params"]["beta"] = report.config.true_params.beta();
    j["sample_sizes"] = report.config.sample_sizes;
    j["replicates"] = report.config.replicates;
    j["penalty_c"] = report.config.penalty.c;
    j["n_starts"] = report.config.n_starts;
    j["seed"] = report.config.seed;

    json cells = json::array();
    for (const StudyCell& cell : report.cells) {
        json c;
        c["n"] = cell.n;
        c["parameter"] = cell.parameter;
        c["estimate"] = cell.estimate_mean;
        c["sd"] = cell.estimate_sd;
        c["bias"] = cell.bias;
        c["mse"] = cell.mse;
        c["replicates_used"] = cell.replicates_used;
        cells.push_back(c);
    }
    j["cells"] = cells;

    json diagnostics = json::array();
    for (const StudyGroupDiagnostics& d : report.diagnostics) {
        diagnostics.push_back({{"n", d.n}, {"failed_replicates", d.failed_replicates}});
    }
    j["diagnostics"] = diagnostics;
    return j.dump(2) + "\n";
}

std::vector<StudyCell> parse_study_csv(std::istream& in) {
    std::vector<DelimitedRow> rows = read_delimited(in);
    std::vector<StudyCell> cells;
    for (const DelimitedRow& row : rows) {
        if (!row.fields.empty() && row.fields[0] == "n") continue;  // header
        if (row.fields.size() != 7) {
            throw IngestError("study CSV row needs 7 fields", row.line);
        }
        StudyCell cell;
        cell.n = static_cast<int>(parse_integer(row.fields[0], row.line));
        cell.parameter = row.fields[1];
        cell.estimate_mean = parse_double(row.fields[2], row.line);
        cell.estimate_sd = parse_double(row.fields[3], row.line);
        cell.bias = parse_double(row.fields[4], row.line);
        cell.mse = parse_double(row.fields[5], row.line);
        cell.replicates_used = static_cast<int>(parse_integer(row.fields[6], row.line));
        cells.push_back(std::move(cell));
    }
    return cells;
}

SampleSummary summarize_sample(const CircularSample& sample) {
    SampleSummary s;
    s.n = static_cast<int>(sample.n());
    std::tie(s.a1, s.b1) = sample_trig_moments(sample, 1);
    std::tie(s.a2, s.b2) = sample_trig_moments(sample, 2);
    s.mean_direction = normalize_angle(std::atan2(s.b1, s.a1)).radians();
    s.resultant_length = std::hypot(s.a1, s.b1);
    s.circular_variance = 1.0 - s.resultant_length;
    return s;
}

std::string param_summary_csv(const ParamSummary& summary) {
    std::ostringstream out;
    out << "kappa,alpha,beta,mean_direction,circular_variance,circular_deviation,"
           "skewness,kurtosis,mode_regime,mode_location,kappa_cutoff\n";
    out << format_double(summary.params.kappa()) << ","
        << format_double(summary.params.alpha()) << ","
        << format_double(summary.params.beta()) << ","
        << format_double(summary.measures.mean_direction) << ","
        << format_double(summary.measures.circular_variance) << ","
        << format_double(summary.measures.circular_deviation) << ","
        << format_double(summary.measures.skewness) << ","
        << format_double(summary.measures.kurtosis) << ","
        << (summary.mode.regime == ModeRegime::Interior ? "interior" : "boundary") << ","
        << format_double(summary.mode.location.radians()) << ","
        << (summary.mode.kappa_cutoff ? format_double(*summary.mode.kappa_cutoff) : "")
        << "\n";
    return out.str();
}

std::string param_summary_json(const ParamSummary& summary) {
    json j;
    j["params"]["kappa"] = summary.params.kappa();
    j["params"]["alpha"] = summary.params.alpha();
    j["params"]["beta"] = summary.params.beta();
    j["mean_direction"] = summary.measures.mean_direction;
    j["circular_variance"] = summary.measures.circular_variance;
    j["circular_deviation"] = summary.measures.circular_deviation;
    j["skewness"] = summary.measures.skewness;
    j["kurtosis"] = summary.measures.kurtosis;
    j["mode"]["regime"] =
        summary.mode.regime == ModeRegime::Interior ? "interior" : "boundary";
    j["mode"]["location"] = summary.mode.location.radians();
    j["mode"]["kappa_cutoff"] =
        summary.mode.kappa_cutoff ? json(*summary.mode.kappa_cutoff) : json(nullptr);
    return j.dump(2) + "\n";
}

std::string sample_summary_csv(const SampleSummary& summary) {
    std::ostringstream out;
    out << "n,a1,b1,a2,b2,mean_direction,resultant_length,circular_variance\n";
    out << summary.n << "," << format_double(summary.a1) << "," << format_double(summary.b1)
        << "," << format_double(summary.a2) << "," << format_double(summary.b2) << ","
        << format_double(summary.mean_direction) << ","
        << format_double(summary.resultant_length) << ","
        << format_double(summary.circular_variance) << "\n";
    return out.str();
}

std::string sample_summary_json(const SampleSummary& summary) {
    json j;
    j["n"] = summary.n;
    j["a1"] = summary.a1;
    j["b1"] = summary.b1;
    j["a2"] = summary.a2;
    j["b2"] = summary.b2;
    j["mean_direction"] = summary.mean_direction;
    j["resultant_length"] = summary.resultant_length;
    j["circular_variance"] = summary.circular_variance;
    return j.dump(2) + "\n";
}

}  // namespace w3pl
