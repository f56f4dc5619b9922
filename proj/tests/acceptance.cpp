// Acceptance suite: runs each release criterion end to end and prints one
// PASS/FAIL/SKIP line per criterion. Exit code is the number of failures.
//
//   w3pl_acceptance [path-to-cli] [data-dir]
//
// Criteria 11a-11c need the real datasets (cross_beds.csv, periwinkles.csv,
// transactions.csv) under data-dir and are skipped when absent.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "support/checks.hpp"
#include "w3pl/densities.hpp"
#include "w3pl/inference.hpp"
#include "w3pl/io.hpp"
#include "w3pl/modality.hpp"
#include "w3pl/moments.hpp"
#include "w3pl/rng.hpp"
#include "w3pl/sampler.hpp"
#include "w3pl/study.hpp"
#include "w3pl/wrapping.hpp"

using namespace w3pl;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    enum class State { Pass, Fail, Skip } state;
    std::string detail;

    static Outcome pass(std::string detail = "") {
        return {State::Pass, std::move(detail)};
    }
    static Outcome fail(std::string detail) { return {State::Fail, std::move(detail)}; }
    static Outcome skip(std::string detail) { return {State::Skip, std::move(detail)}; }
};

std::string cli_path;
std::string data_dir;
int failures = 0;

std::string fmt(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4g", v);
    return buffer;
}

void report(const std::string& id, const std::string& label,
            const std::function<Outcome()>& body, double max_seconds = 0.0) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = Outcome::fail("unexpected exception");
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = Outcome::fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.state == Outcome::State::Pass && max_seconds > 0.0 && seconds > max_seconds) {
        outcome = Outcome::fail("runtime " + fmt(seconds) + "s exceeds " + fmt(max_seconds) +
                                "s budget");
    }

    const char* tag = outcome.state == Outcome::State::Pass   ? "PASS"
                      : outcome.state == Outcome::State::Fail ? "FAIL"
                                                              : "SKIP";
    if (outcome.state == Outcome::State::Fail) ++failures;
    std::printf("criterion %-3s %s  %s", id.c_str(), tag, label.c_str());
    if (!outcome.detail.empty()) std::printf(" [%s]", outcome.detail.c_str());
    std::printf(" (%.2fs)\n", seconds);
    std::fflush(stdout);
}

bool within(double value, double target, double tol) {
    return std::abs(value - target) <= tol;
}

// --- 1: representative summary rows ---

Outcome criterion_table1() {
    struct Row {
        double kappa, alpha, beta, mu, v0, eta1, eta2;
    };
    const Row rows[] = {
        {0.25, 1, 3, 2.353, 0.938, -0.014, -0.015}, {0.25, 1, 2, 2.233, 0.936, -0.017, -0.016},
        {0.25, 2, 1, 1.724, 0.902, -0.050, -0.011}, {0.25, 3, 1, 1.609, 0.883, -0.066, -0.003},
        {1.00, 1, 1, 1.107, 0.441, -0.683, 0.526},  {1.00, 1, 4, 1.373, 0.490, -0.497, 0.267},
        {1.00, 4, 1, 0.896, 0.360, -0.973, 1.124},  {1.00, 1, 50, 1.551, 0.500, -0.453, 0.230},
        {1.00, 50, 1, 0.795, 0.300, -1.228, 1.680}, {1.60, 6, 3, 0.673, 0.204, -1.815, 2.657},
        {2.00, 6, 3, 0.547, 0.138, -2.441, 4.006},  {2.40, 6, 3, 0.458, 0.099, -2.982, 5.236},
    };
    double worst = 0.0;
    for (const Row& row : rows) {
        const SummaryMeasures s = summary_measures(W3plParams(row.kappa, row.alpha, row.beta));
        const double err = std::max({std::abs(s.mean_direction - row.mu),
                                     std::abs(s.circular_variance - row.v0),
                                     std::abs(s.skewness - row.eta1),
                                     std::abs(s.kurtosis - row.eta2)});
        worst = std::max(worst, err);
        if (err > 5e-4) {
            return Outcome::fail("row (" + fmt(row.kappa) + "," + fmt(row.alpha) + "," +
                                 fmt(row.beta) + ") max err " + fmt(err));
        }
    }
    return Outcome::pass("12 rows, max err " + fmt(worst));
}

// --- 2: wrapped-Lindley nesting ---

Outcome criterion_nesting() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double theta = two_pi * (i + 0.5) / 50.0;
        const double kappa = 0.05 * std::pow(10.0 / 0.05, i / 49.0);
        const W3plParams nested(kappa, 1.0, 1.0);
        worst = std::max(worst, std::abs(w3pl_pdf(Angle(theta), nested) -
                                         wrapped_lindley_pdf(Angle(theta), kappa)));
        worst = std::max(worst,
                         std::abs(w3pl_cdf(theta, nested) - wrapped_lindley_cdf(theta, kappa)));
        const SummaryMeasures a = summary_measures(nested);
        const SummaryMeasures b = wl_summary_measures(kappa);
        worst = std::max({worst, std::abs(a.mean_direction - b.mean_direction),
                          std::abs(a.circular_variance - b.circular_variance),
                          std::abs(a.skewness - b.skewness),
                          std::abs(a.kurtosis - b.kurtosis)});
    }
    if (worst >= 1e-12) return Outcome::fail("max deviation " + fmt(worst));
    return Outcome::pass("50-point grid, max deviation " + fmt(worst));
}

// --- 3: truncated wrapping-sum oracle ---

Outcome criterion_oracle() {
    const W3plParams configs[] = {W3plParams(0.25, 1, 3), W3plParams(0.25, 3, 1),
                                  W3plParams(1, 1, 4),    W3plParams(1, 50, 1),
                                  W3plParams(1.6, 6, 3),  W3plParams(2.4, 6, 3)};
    double worst = 0.0;
    for (const W3plParams& params : configs) {
        const LinearParams3PL lin(params.kappa(), params.alpha(), params.beta());
        const int terms = default_wrap_terms(params.kappa());
        for (int i = 0; i < 20; ++i) {
            const double theta = two_pi * (i + 0.5) / 20.0;
            const double pdf_sum = wrap_sum_pdf_oracle(
                Angle(theta), [&](double x) { return linear_3pl_pdf(x, lin); }, terms);
            double cdf_sum = 0.0;
            for (int m = 0; m < terms; ++m) {
                cdf_sum += linear_3pl_cdf(theta + two_pi * m, lin) -
                           linear_3pl_cdf(two_pi * m, lin);
            }
            worst = std::max(worst, std::abs(w3pl_pdf(Angle(theta), params) - pdf_sum));
            worst = std::max(worst, std::abs(w3pl_cdf(theta, params) - cdf_sum));
        }
    }
    if (worst >= 1e-10) return Outcome::fail("max deviation " + fmt(worst));
    return Outcome::pass("120 pdf+cdf pairs, max deviation " + fmt(worst));
}

// --- 4: normalization of every density ---

Outcome criterion_normalization() {
    double worst = 0.0;
    const auto check_mass = [&](double mass) { worst = std::max(worst, std::abs(mass - 1.0)); };

    for (const W3plParams& p :
         {W3plParams(0.25, 1, 3), W3plParams(1, 1, 1), W3plParams(8, 1, 6)}) {
        check_mass(checks::integrate_circle([&](double t) { return w3pl_pdf(Angle(t), p); }));
    }
    for (double kappa : {0.25, 0.7, 2.0}) {
        check_mass(checks::integrate_circle(
            [&](double t) { return wrapped_lindley_pdf(Angle(t), kappa); }));
    }
    for (double kappa : {0.3, 1.0, 4.0}) {
        check_mass(checks::integrate_circle(
            [&](double t) { return wrapped_xlindley_pdf(Angle(t), kappa); }));
        check_mass(checks::integrate_circle(
            [&](double t) { return wrapped_exponential_pdf(Angle(t), kappa); }));
    }
    {
        const W3plParams p(1, 2, 5);
        const InvarianceTransform reflect_shift(-1, Angle(pi / 3.0));
        check_mass(checks::integrate_circle_split(
            [&](double t) { return transformed_pdf(Angle(t), reflect_shift, p); },
            normalize_angle(-pi / 3.0).radians()));
        const InvarianceTransform rotate(1, Angle(1.0));
        check_mass(checks::integrate_circle_split(
            [&](double t) { return transformed_pdf(Angle(t), rotate, p); }, 1.0));
    }
    if (worst >= 1e-8) return Outcome::fail("max |mass - 1| " + fmt(worst));
    return Outcome::pass("14 densities, max |mass - 1| " + fmt(worst));
}

// --- 5: mode cutoff and classification ---

Outcome criterion_mode() {
    const double cutoff = solve_kappa_cutoff(1.5);
    if (!within(cutoff, 0.6102, 1e-3)) return Outcome::fail("kappa_r(1.5) = " + fmt(cutoff));

    const ModeResult interior = mode_of(W3plParams(0.2441, 6, 4));
    if (interior.regime != ModeRegime::Interior ||
        !within(interior.location.radians(), 0.8681, 1e-3)) {
        return Outcome::fail("interior mode at " + fmt(interior.location.radians()));
    }
    const ModeResult boundary = mode_of(W3plParams(0.7322, 6, 4));
    if (boundary.regime != ModeRegime::Boundary || boundary.location.radians() != 0.0) {
        return Outcome::fail("boundary case misclassified");
    }
    return Outcome::pass("kappa_r = " + fmt(cutoff) + ", mode = " +
                         fmt(interior.location.radians()));
}

// --- 6: limits of the cutoff function ---

Outcome criterion_s_limits() {
    const double near_zero = s_of_kappa(1e-8);
    const double at_50 = s_of_kappa(50.0);
    if (!within(near_zero, pi, 1e-6)) return Outcome::fail("S(1e-8) = " + fmt(near_zero));
    if (!(at_50 < 0.021)) return Outcome::fail("S(50) = " + fmt(at_50));
    return Outcome::pass("S(1e-8) = pi - " + fmt(pi - near_zero) + ", S(50) = " + fmt(at_50));
}

// --- 7: stationarity and maximality at interior modes ---

Outcome criterion_stationarity() {
    const W3plParams configs[] = {W3plParams(0.2441, 6, 4), W3plParams(1, 2, 5),
                                  W3plParams(4, 1, 8),      W3plParams(0.25, 1, 3),
                                  W3plParams(0.25, 1, 2),   W3plParams(0.1, 1, 1)};
    double worst_derivative = 0.0;
    for (const W3plParams& params : configs) {
        const ModeResult result = mode_of(params);
        if (result.regime != ModeRegime::Interior) {
            return Outcome::fail("expected interior regime");
        }
        const double derivative = std::abs(pdf_derivative(result.location, params));
        worst_derivative = std::max(worst_derivative, derivative);
        if (derivative >= 1e-10) return Outcome::fail("|g'(mode)| = " + fmt(derivative));

        const double peak = w3pl_pdf(result.location, params);
        for (int i = 0; i < 1000; ++i) {
            const Angle theta(two_pi * i / 1000.0);
            if (std::abs(theta.radians() - result.location.radians()) < 1e-12) continue;
            if (peak <= w3pl_pdf(theta, params)) {
                return Outcome::fail("grid point above the mode");
            }
        }
    }
    return Outcome::pass("6 configurations, max |g'(mode)| " + fmt(worst_derivative));
}

// --- 8: sampler KS tests ---

Outcome criterion_sampler_ks() {
    const W3plParams configs[] = {W3plParams(1, 2, 5), W3plParams(4, 1, 8),
                                  W3plParams(2, 4, 1), W3plParams(8, 1, 6)};
    const int n = 100000;
    const double critical = checks::ks_critical_001(n);
    double worst = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
        const CircularSample draws = sample(configs[c], n, derive_stream(8, {c}));
        std::vector<double> values;
        values.reserve(draws.n());
        for (Angle a : draws) values.push_back(a.radians());
        const double d = checks::ks_statistic(
            std::move(values), [&](double t) { return w3pl_cdf(t, configs[c]); });
        worst = std::max(worst, d);
        if (d >= critical) {
            return Outcome::fail("KS = " + fmt(d) + " >= " + fmt(critical));
        }
    }
    return Outcome::pass("4 configs x 1e5 draws, max KS " + fmt(worst) + " < " +
                         fmt(critical));
}

// --- 9: desk-scale recovery study ---

Outcome criterion_study() {
    const std::vector<int> sizes{50, 100, 250, 500};
    StudyConfig interior_a{W3plParams(4, 1, 8), sizes, 50, PenaltyConfig{}, 20, 1001, 4096, 1};
    StudyConfig interior_b{W3plParams(1, 2, 5), sizes, 50, PenaltyConfig{}, 20, 1001, 4096, 1};
    const StudyReport report_a = run_study(interior_a);
    const StudyReport report_b = run_study(interior_b);

    const double mean_kappa = report_a.cell(500, "kappa").estimate_mean;
    const double mse_kappa = report_a.cell(500, "kappa").mse;
    if (!(mean_kappa >= 3.9 && mean_kappa <= 4.1)) {
        return Outcome::fail("mean kappa at n=500: " + fmt(mean_kappa));
    }
    if (!(mse_kappa >= 0.015 && mse_kappa <= 0.06)) {
        return Outcome::fail("MSE(kappa) at n=500: " + fmt(mse_kappa));
    }

    // Every parameter's MSE must decrease from n=50 to n=500; the
    // concentration parameter must decrease through every intermediate size
    // as well. The shape parameters are identified only through the penalty,
    // so their step-to-step MSEs fluctuate, as the reference tables
    // themselves do.
    for (const StudyReport* report : {&report_a, &report_b}) {
        for (const char* parameter : {"kappa", "alpha", "beta"}) {
            const double first = report->cell(50, parameter).mse;
            const double last = report->cell(500, parameter).mse;
            if (!(last < first)) {
                return Outcome::fail(std::string(parameter) + " MSE did not decrease: " +
                                     fmt(first) + " -> " + fmt(last));
            }
        }
        double previous = std::numeric_limits<double>::infinity();
        for (int n : sizes) {
            const double mse = report->cell(n, "kappa").mse;
            if (!(mse < previous)) {
                return Outcome::fail("kappa MSE not monotone at n=" + std::to_string(n));
            }
            previous = mse;
        }
    }
    return Outcome::pass("mean kappa " + fmt(mean_kappa) + ", MSE(kappa) " + fmt(mse_kappa));
}

// --- 9b (module invariant): boundary regime is less stable for alpha ---

Outcome property_regime_contrast() {
    StudyConfig boundary{W3plParams(2, 4, 1), {500}, 100, PenaltyConfig{}, 20, 71, 4096, 1};
    StudyConfig interior{W3plParams(4, 1, 8), {500}, 100, PenaltyConfig{}, 20, 71, 4096, 1};
    const double mse_boundary = run_study(boundary).cell(500, "alpha").mse;
    const double mse_interior = run_study(interior).cell(500, "alpha").mse;
    if (!(mse_boundary > mse_interior)) {
        return Outcome::fail("MSE(alpha) boundary " + fmt(mse_boundary) + " <= interior " +
                             fmt(mse_interior));
    }
    return Outcome::pass("MSE(alpha) boundary " + fmt(mse_boundary) + " > interior " +
                         fmt(mse_interior));
}

// --- 10: information-criteria arithmetic ---

Outcome criterion_information() {
    const InformationCriteria crossbed = information_criteria(-177.094, 3, 104);
    if (!within(crossbed.aic, 360.189, 0.01)) return Outcome::fail("AIC " + fmt(crossbed.aic));
    if (!within(crossbed.bic, 368.122, 0.01)) return Outcome::fail("BIC " + fmt(crossbed.bic));
    const InformationCriteria periwinkle = information_criteria(-37.988, 3, 31);
    if (!periwinkle.aicc || !within(*periwinkle.aicc, 82.865, 0.01)) {
        return Outcome::fail("AICc " + fmt(periwinkle.aicc.value_or(-1.0)));
    }
    return Outcome::pass("AIC " + fmt(crossbed.aic) + ", BIC " + fmt(crossbed.bic) +
                         ", AICc " + fmt(*periwinkle.aicc));
}

// --- 11: conditional real-data fits ---

struct DatasetCheck {
    std::string file;
    DatasetSpec spec;
    std::optional<double> min_loglik;
    std::vector<std::pair<std::string, double>> references;  // checked to +-0.5
    std::vector<std::string> best_under;                     // w3pl must win these
};

Outcome run_dataset_check(const DatasetCheck& check) {
    const fs::path path = fs::path(data_dir) / check.file;
    if (data_dir.empty() || !fs::exists(path)) {
        return Outcome::skip("dataset not present: " + check.file);
    }
    DatasetSpec spec = check.spec;
    spec.path = path.string();
    const CircularSample data = ingest(spec);

    const std::vector<ModelFamily> families{ModelFamily::W3pl, ModelFamily::WrappedLindley,
                                            ModelFamily::WrappedXlindley,
                                            ModelFamily::WrappedExponential};
    const ModelComparison comparison = fit_models(data, families, PenaltyConfig{}, 40, 7);
    const ModelFitRow& w3pl_row = comparison.rows[0];
    if (!w3pl_row.ok) return Outcome::fail("w3pl fit failed: " + w3pl_row.error);

    if (check.min_loglik && !(w3pl_row.loglik >= *check.min_loglik)) {
        return Outcome::fail("LL " + fmt(w3pl_row.loglik) + " < " + fmt(*check.min_loglik));
    }
    for (const auto& [name, reference] : check.references) {
        double value = std::numeric_limits<double>::infinity();
        if (name == "aic") value = w3pl_row.criteria->aic;
        if (name == "bic") value = w3pl_row.criteria->bic;
        if (name == "aicc" && w3pl_row.criteria->aicc) value = *w3pl_row.criteria->aicc;
        if (!within(value, reference, 0.5)) {
            return Outcome::fail(name + " " + fmt(value) + " vs " + fmt(reference));
        }
    }
    for (const std::string& criterion : check.best_under) {
        std::optional<std::size_t> best;
        if (criterion == "aic") best = comparison.best_aic;
        if (criterion == "aicc") best = comparison.best_aicc;
        if (criterion == "bic") best = comparison.best_bic;
        if (!best || comparison.rows[*best].family != ModelFamily::W3pl) {
            return Outcome::fail("w3pl not best under " + criterion);
        }
    }
    return Outcome::pass("n = " + std::to_string(data.n()) + ", LL " + fmt(w3pl_row.loglik));
}

// --- 12: vanishing-penalty trend ---

Outcome criterion_penalty_trend() {
    const W3plParams truth(1, 2, 5);
    double previous_gap = std::numeric_limits<double>::infinity();
    std::string detail = "gaps";
    for (int n : {50, 500, 5000}) {
        const CircularSample data =
            sample(truth, n, derive_stream(11, {static_cast<std::uint64_t>(n)}));
        // A common explicit start isolates the penalty's displacement; with
        // the random multistart the retained position along the flat
        // shape-scale ray would differ between the two runs for reasons
        // unrelated to the penalty.
        FitOptions with_penalty;
        with_penalty.penalty.c = 0.5;
        with_penalty.explicit_starts = {{truth.kappa(), truth.alpha(), truth.beta()}};
        FitOptions without_penalty = with_penalty;
        without_penalty.penalty.c = 0.0;

        const FitResult on = fit_w3pl(data, with_penalty);
        const FitResult off = fit_w3pl(data, without_penalty);
        const double gap = std::sqrt(std::pow(on.params.kappa() - off.params.kappa(), 2) +
                                     std::pow(on.params.alpha() - off.params.alpha(), 2) +
                                     std::pow(on.params.beta() - off.params.beta(), 2));
        detail += " " + fmt(gap);
        if (!(gap < previous_gap)) {
            return Outcome::fail("gap did not shrink at n=" + std::to_string(n));
        }
        previous_gap = gap;
    }
    return Outcome::pass(detail);
}

// --- 13: CLI determinism ---

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& args) {
    const std::string command = "\"" + cli_path + "\" " + args + " >/dev/null 2>&1";
    return std::system(command.c_str());
}

Outcome criterion_determinism() {
    if (cli_path.empty() || !fs::exists(cli_path)) {
        return Outcome::skip("CLI binary not provided");
    }
    const fs::path dir = fs::temp_directory_path() / "w3pl_acceptance";
    fs::create_directories(dir);
    const auto out = [&](const std::string& name) { return (dir / name).string(); };

    // sample: identical bytes across reruns.
    if (run_cli("sample --kappa 1 --alpha 2 --beta 5 --n 400 --seed 99 --out " +
                out("s1.txt")) != 0 ||
        run_cli("sample --kappa 1 --alpha 2 --beta 5 --n 400 --seed 99 --out " +
                out("s2.txt")) != 0) {
        return Outcome::fail("sample command failed");
    }
    if (slurp(out("s1.txt")) != slurp(out("s2.txt"))) {
        return Outcome::fail("sample output differs between runs");
    }

    // fit: identical bytes across reruns on the generated dataset.
    if (run_cli("fit --data " + out("s1.txt") + " --starts 8 --seed 5 --format json --out " +
                out("f1.json")) != 0 ||
        run_cli("fit --data " + out("s1.txt") + " --starts 8 --seed 5 --format json --out " +
                out("f2.json")) != 0) {
        return Outcome::fail("fit command failed");
    }
    if (slurp(out("f1.json")) != slurp(out("f2.json"))) {
        return Outcome::fail("fit output differs between runs");
    }

    // simulate: identical bytes across reruns and across thread counts.
    const std::string study_flags =
        "simulate --kappa 1 --alpha 2 --beta 5 --sizes 30,60 --replicates 6 --starts 6 "
        "--seed 17 ";
    if (run_cli(study_flags + "--threads 1 --out " + out("t1.csv")) != 0 ||
        run_cli(study_flags + "--threads 1 --out " + out("t1b.csv")) != 0 ||
        run_cli(study_flags + "--threads 4 --out " + out("t4.csv")) != 0) {
        return Outcome::fail("simulate command failed");
    }
    if (slurp(out("t1.csv")) != slurp(out("t1b.csv"))) {
        return Outcome::fail("simulate output differs between runs");
    }
    if (slurp(out("t1.csv")) != slurp(out("t4.csv"))) {
        return Outcome::fail("simulate output differs across thread counts");
    }
    return Outcome::pass("sample, fit, simulate byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];
    if (argc > 2) data_dir = argv[2];

    report("1", "representative summary measures within 5e-4", criterion_table1, 1.0);
    report("2", "wrapped-Lindley nesting within 1e-12", criterion_nesting);
    report("3", "closed forms match wrapping sums within 1e-10", criterion_oracle, 5.0);
    report("4", "every density integrates to 1 within 1e-8", criterion_normalization);
    report("5", "mode cutoff and classification", criterion_mode);
    report("6", "cutoff-function limits", criterion_s_limits);
    report("7", "stationarity and maximality at interior modes", criterion_stationarity);
    report("8", "sampler passes KS at significance 0.01", criterion_sampler_ks, 30.0);
    report("9", "desk-scale parameter-recovery study", criterion_study);
    report("9b", "boundary regime less stable than interior (module invariant)",
           property_regime_contrast);
    report("10", "information-criteria arithmetic", criterion_information);

    report("11a", "cross-bed dataset fit (conditional)", [] {
        DatasetCheck check;
        check.file = "cross_beds.csv";
        check.spec = DatasetSpec{"", AngleUnit::Degrees, "0", false};
        check.min_loglik = -177.2;
        check.references = {{"aic", 360.189}, {"bic", 368.122}};
        check.best_under = {"aic", "bic"};
        return run_dataset_check(check);
    });
    report("11b", "periwinkle dataset fit (conditional)", [] {
        DatasetCheck check;
        check.file = "periwinkles.csv";
        check.spec = DatasetSpec{"", AngleUnit::Degrees, "0", false};
        check.references = {{"aicc", 82.865}, {"bic", 86.278}};
        check.best_under = {"aicc", "bic"};
        return run_dataset_check(check);
    });
    report("11c", "transaction dataset fit (conditional)", [] {
        DatasetCheck check;
        check.file = "transactions.csv";
        check.spec = DatasetSpec{"", AngleUnit::HourOfDay, "0", true};
        check.references = {{"aic", 981.609}, {"bic", 992.828}};
        check.best_under = {"aic", "bic"};
        return run_dataset_check(check);
    });

    report("12", "penalty influence vanishes with sample size", criterion_penalty_trend);
    report("13", "seeded commands are byte-identical", criterion_determinism);

    std::printf("%s (%d failure%s)\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures,
                failures == 1 ? "" : "s");
    return failures;
}
