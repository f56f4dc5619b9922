#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "w3pl/angle.hpp"
#include "w3pl/densities.hpp"
#include "w3pl/inference.hpp"
#include "w3pl/modality.hpp"
#include "w3pl/moments.hpp"
#include "w3pl/study.hpp"

namespace w3pl {

class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& message, long row = -1)
        : std::runtime_error(row >= 0 ? message + " (row " + std::to_string(row) + ")"
                                      : message),
          row_(row) {}

    /// 1-based row in the input file, or -1 when not row-specific.
    long row() const { return row_; }

private:
    long row_;
};

struct DatasetSpec {
    std::string path;
    AngleUnit unit = AngleUnit::Radians;
    std::string column = "0";  // 0-based index, or a header name
    bool hour_counts = false;  // rows are (hour, count) pairs to expand
};

/// Reads a delimited text file (comma or whitespace separated, '#' comments
/// skipped), applies the unit conversion, and normalizes every angle.
CircularSample ingest(const DatasetSpec& spec);

struct DelimitedRow {
    long line;  // 1-based line number in the source
    std::vector<std::string> fields;
};

std::vector<DelimitedRow> read_delimited(std::istream& in);

/// Decimal form with 17 significant digits; round-trips any finite double.
std::string format_double(double value);

/// Angles, one per row, preceded by a deterministic provenance comment.
void write_sample(std::ostream& out, const CircularSample& sample,
                  const W3plParams& params, std::uint64_t seed);

// --- Plot-ready numeric grids ---

struct PlotGrid {
    std::vector<double> thetas;  // equally spaced over [0, 2*pi)
    std::vector<std::pair<std::string, std::vector<double>>> densities;
    std::vector<double> histogram_edges;  // bins+1 edges; empty without a sample
    std::vector<int> histogram_counts;
};

PlotGrid make_plot_grid(const std::vector<ModelKind>& models,
                        const CircularSample* sample_or_null, int grid_points = 512,
                        int bins = 20);

std::string plot_grid_csv(const PlotGrid& grid);
std::string plot_grid_json(const PlotGrid& grid);

// --- Report serialization ---

struct FitReportMeta {
    std::optional<DatasetSpec> dataset;
    std::optional<int> dataset_n;
    std::uint64_t seed = 0;
    double penalty_c = 0.5;
    int n_starts = 20;
};

std::string fit_report_csv(const ModelComparison& comparison);
std::string fit_report_json(const ModelComparison& comparison, const FitReportMeta& meta);

std::string study_report_csv(const StudyReport& report);
std::string study_report_json(const StudyReport& report);

/// Re-parses the CSV emitted by study_report_csv back into table rows.
std::vector<StudyCell> parse_study_csv(std::istream& in);

struct ParamSummary {
    W3plParams params;
    SummaryMeasures measures;
    ModeResult mode;
};

struct SampleSummary {
    int n = 0;
    double a1 = 0.0, b1 = 0.0;
    double a2 = 0.0, b2 = 0.0;
    double mean_direction = 0.0;    // atan2(b1, a1) reduced to [0, 2*pi)
    double resultant_length = 0.0;  // sqrt(a1^2 + b1^2)
    double circular_variance = 0.0;
};

SampleSummary summarize_sample(const CircularSample& sample);

std::string param_summary_csv(const ParamSummary& summary);
std::string param_summary_json(const ParamSummary& summary);
std::string sample_summary_csv(const SampleSummary& summary);
std::string sample_summary_json(const SampleSummary& summary);

}  // namespace w3pl
