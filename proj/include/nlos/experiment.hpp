#pragma once
/**
 * @file experiment.hpp
 * @brief Config-driven runner comparing the closed-form, exponential and
 *        Monte Carlo bias CDFs.
 *
 * Config files are JSON:
 *
 *     {
 *       "link":       { "separation_m": 300 },
 *       "reflectors": { "buildings_per_km2": 10,          // or "intensity_per_m2"
 *                       "widths_m": [20, 40, 60],
 *                       "orientations_deg": [10, 45, 80],
 *                       "pmf": "uniform" },               // or rows of numbers, one per width
 *       "simulation": { "realizations": 100000, "seed": 42,
 *                       "window": "auto", "workers": 1 }, // or {x_min, x_max, y_min, y_max}
 *       "bias_grid":  { "max_m": 1500, "step_m": 5 },
 *       "region_check": { ... }                           // optional, see RegionCheckConfig
 *     }
 *
 * Artifacts written to the output directory:
 *   curves.csv   bias_m,cdf_theorem2,cdf_exp_approx,cdf_empirical
 *   samples.csv  realization,path_m,bias_m,censored
 *   report.json  the ComparisonReport
 */

#include "nlos/boolean_model.hpp"
#include "nlos/reflection_region.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlos {

/// Invalid or malformed configuration; field() is a dotted path such as "simulation.realizations".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    [[nodiscard]] const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Filesystem failure reading a config or writing artifacts.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BiasGrid {
    double max_m;
    double step_m;

    /// k * step for k = 0 .. floor(max / step), computed by multiplication.
    [[nodiscard]] std::vector<double> points() const;
};

struct RegionCheckConfig {
    std::vector<double> widths_m;
    std::vector<double> orientations_rad;
    std::vector<double> path_bounds_m;
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{7};
    double sigma_limit{3.0};
};

struct ExperimentConfig {
    double separation_m;
    double intensity_per_m2;
    MarkDistribution marks;
    std::size_t realizations;
    std::uint64_t seed;
    BiasGrid bias_grid;
    std::optional<Rect> window;  ///< empty means "auto"
    unsigned workers{1};
    RegionCheckConfig region_check;

    /// The explicit window, or the truncation window for the largest grid bias.
    [[nodiscard]] Rect effective_window() const;
    [[nodiscard]] BooleanModelConfig boolean_model() const;
};

[[nodiscard]] ExperimentConfig parse_config(const std::string& json_text);
[[nodiscard]] ExperimentConfig load_config(const std::filesystem::path& path);

struct ComparisonReport {
    double ks_empirical_vs_theorem{0.0};  ///< exact sup distance on the bias grid's range
    double max_gap_theorem_vs_approx{0.0};
    std::size_t realizations{0};
    std::size_t censored_count{0};
    double coverage_fraction{0.0};
    double runtime_s{0.0};
    bool simulated{false};
};

void print_report(std::ostream& os, const ComparisonReport& report);

/// Sup of |closed form - exponential approximation| over the bias grid.
[[nodiscard]] double max_gap_theorem_vs_approx(const ExperimentConfig& cfg);

/**
 * Writes curves.csv (and samples.csv when @p simulate) under @p out_dir and
 * returns the comparison statistics. Without simulation the cdf_empirical
 * column is left empty.
 */
ComparisonReport run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, bool simulate = true);

struct RegionCheckRow {
    double width;
    double orientation;
    double path_bound;
    double closed_form;
    AreaEstimate estimate;

    [[nodiscard]] double z_score() const;
};

/// Closed-form region area vs rejection sampling over every combination in cfg.region_check.
[[nodiscard]] std::vector<RegionCheckRow> validate_region(const ExperimentConfig& cfg);

}  // namespace nlos
