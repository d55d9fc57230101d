#include "nlos/experiment.hpp"

#include "nlos/analytic.hpp"
#include "nlos/random.hpp"
#include "nlos/shortest_path.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace nlos {

namespace {

using nlohmann::json;

constexpr double kDegree = std::numbers::pi / 180.0;

std::string join(const std::string& parent, const std::string& key) { return parent.empty() ? key : parent + "." + key; }

const json& require(const json& obj, const std::string& parent, const std::string& key) {
    if (!obj.contains(key))
        throw ConfigError(join(parent, key), "missing required field");
    return obj.at(key);
}

const json& require_object(const json& obj, const std::string& parent, const std::string& key) {
    const json& v = require(obj, parent, key);
    if (!v.is_object())
        throw ConfigError(join(parent, key), "expected an object");
    return v;
}

double number(const json& v, const std::string& field) {
    if (!v.is_number())
        throw ConfigError(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        throw ConfigError(field, "expected a finite number");
    return x;
}

double positive(const json& v, const std::string& field) {
    const double x = number(v, field);
    if (!(x > 0.0))
        throw ConfigError(field, "must be > 0, got " + v.dump());
    return x;
}

std::uint64_t count(const json& v, const std::string& field, bool allow_zero) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0))
        throw ConfigError(field, "expected a non-negative integer");
    const auto n = v.get<std::uint64_t>();
    if (!allow_zero && n == 0)
        throw ConfigError(field, "must be >= 1");
    return n;
}

std::vector<double> number_list(const json& v, const std::string& field) {
    if (!v.is_array() || v.empty())
        throw ConfigError(field, "expected a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<double> orientations_from_degrees(const json& v, const std::string& field) {
    std::vector<double> out = number_list(v, field);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (!(out[i] > 0.0 && out[i] < 90.0))
            throw ConfigError(field + "[" + std::to_string(i) + "]", "orientation must lie strictly between 0 and 90 degrees");
        out[i] *= kDegree;
    }
    return out;
}

std::vector<double> widths_list(const json& v, const std::string& field) {
    std::vector<double> out = number_list(v, field);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!(out[i] > 0.0))
            throw ConfigError(field + "[" + std::to_string(i) + "]", "width must be > 0");
    return out;
}

MarkDistribution parse_marks(const json& refl) {
    const std::string parent = "reflectors";
    std::vector<double> widths = widths_list(require(refl, parent, "widths_m"), "reflectors.widths_m");
    std::vector<double> orients =
        orientations_from_degrees(require(refl, parent, "orientations_deg"), "reflectors.orientations_deg");

    const json pmf = refl.value("pmf", json("uniform"));
    if (pmf.is_string()) {
        if (pmf.get<std::string>() != "uniform")
            throw ConfigError("reflectors.pmf", "expected \"uniform\" or a matrix");
        return MarkDistribution::uniform(std::move(widths), std::move(orients));
    }
    if (!pmf.is_array() || pmf.size() != widths.size())
        throw ConfigError("reflectors.pmf", "expected " + std::to_string(widths.size()) + " rows (one per width)");
    std::vector<double> flat;
    for (std::size_t i = 0; i < pmf.size(); ++i) {
        const std::string row_field = "reflectors.pmf[" + std::to_string(i) + "]";
        const auto row = number_list(pmf[i], row_field);
        if (row.size() != orients.size())
            throw ConfigError(row_field, "expected " + std::to_string(orients.size()) + " entries (one per orientation)");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    try {
        return MarkDistribution(std::move(widths), std::move(orients), std::move(flat));
    } catch (const std::invalid_argument& e) {
        throw ConfigError("reflectors.pmf", e.what());
    }
}

double parse_intensity(const json& refl) {
    const bool per_km2 = refl.contains("buildings_per_km2");
    const bool per_m2 = refl.contains("intensity_per_m2");
    if (per_km2 == per_m2)
        throw ConfigError("reflectors.intensity_per_m2", "give exactly one of intensity_per_m2 or buildings_per_km2");
    const std::string field = per_km2 ? "reflectors.buildings_per_km2" : "reflectors.intensity_per_m2";
    const json& v = refl.at(per_km2 ? "buildings_per_km2" : "intensity_per_m2");
    const double x = number(v, field);
    if (!(x > 0.0))
        throw ConfigError(field, "intensity lambda must be > 0, got " + v.dump());
    return per_km2 ? x * 1e-6 : x;
}

std::optional<Rect> parse_window(const json& sim) {
    if (!sim.contains("window"))
        return std::nullopt;
    const json& w = sim.at("window");
    if (w.is_string()) {
        if (w.get<std::string>() != "auto")
            throw ConfigError("simulation.window", "expected \"auto\" or {x_min, x_max, y_min, y_max}");
        return std::nullopt;
    }
    if (!w.is_object())
        throw ConfigError("simulation.window", "expected \"auto\" or {x_min, x_max, y_min, y_max}");
    const std::string parent = "simulation.window";
    Rect r{number(require(w, parent, "x_min"), parent + ".x_min"), number(require(w, parent, "x_max"), parent + ".x_max"),
           number(require(w, parent, "y_min"), parent + ".y_min"), number(require(w, parent, "y_max"), parent + ".y_max")};
    if (!(r.width() > 0.0 && r.height() > 0.0))
        throw ConfigError(parent, "window must have positive area");
    return r;
}

// Three representative values: smallest, middle and largest.
std::vector<double> spread(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() <= 3)
        return values;
    return {values.front(), values[values.size() / 2], values.back()};
}

RegionCheckConfig parse_region_check(const json& root, const MarkDistribution& marks, double d) {
    RegionCheckConfig rc;
    rc.widths_m = spread(marks.widths());
    rc.orientations_rad = spread(marks.orientations());
    rc.path_bounds_m = {1.25 * d, 2.0 * d, 4.0 * d};
    if (!root.contains("region_check"))
        return rc;
    const json& r = root.at("region_check");
    if (!r.is_object())
        throw ConfigError("region_check", "expected an object");
    if (r.contains("widths_m"))
        rc.widths_m = widths_list(r.at("widths_m"), "region_check.widths_m");
    if (r.contains("orientations_deg"))
        rc.orientations_rad = orientations_from_degrees(r.at("orientations_deg"), "region_check.orientations_deg");
    if (r.contains("path_bounds_m")) {
        rc.path_bounds_m = number_list(r.at("path_bounds_m"), "region_check.path_bounds_m");
        for (std::size_t i = 0; i < rc.path_bounds_m.size(); ++i)
            if (!(rc.path_bounds_m[i] > d))
                throw ConfigError("region_check.path_bounds_m[" + std::to_string(i) + "]",
                                  "path bound must exceed link.separation_m");
    }
    if (r.contains("samples"))
        rc.samples = count(r.at("samples"), "region_check.samples", false);
    if (r.contains("seed"))
        rc.seed = count(r.at("seed"), "region_check.seed", true);
    if (r.contains("sigma_limit"))
        rc.sigma_limit = positive(r.at("sigma_limit"), "region_check.sigma_limit");
    return rc;
}

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out)
        throw IoError("failed writing " + path.string());
}

}  // namespace

std::vector<double> BiasGrid::points() const {
    const auto n = static_cast<std::size_t>(std::floor(max_m / step_m + 1e-9));
    std::vector<double> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        out[k] = static_cast<double>(k) * step_m;
    return out;
}

Rect ExperimentConfig::effective_window() const {
    if (window)
        return *window;
    return truncation_window(separation_m + bias_grid.max_m, separation_m, marks.max_width());
}

BooleanModelConfig ExperimentConfig::boolean_model() const {
    return BooleanModelConfig{intensity_per_m2, effective_window(), marks};
}

ExperimentConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object())
        throw ConfigError("<root>", "expected a JSON object");

    const json& link = require_object(root, "", "link");
    const double d = positive(require(link, "link", "separation_m"), "link.separation_m");

    const json& refl = require_object(root, "", "reflectors");
    const double lambda = parse_intensity(refl);
    MarkDistribution marks = parse_marks(refl);

    const json& sim = require_object(root, "", "simulation");
    const auto n = count(require(sim, "simulation", "realizations"), "simulation.realizations", false);
    const auto seed = count(require(sim, "simulation", "seed"), "simulation.seed", true);
    unsigned workers = 1;
    if (sim.contains("workers"))
        workers = static_cast<unsigned>(count(sim.at("workers"), "simulation.workers", false));
    std::optional<Rect> window = parse_window(sim);

    const json& grid = require_object(root, "", "bias_grid");
    const BiasGrid bias{positive(require(grid, "bias_grid", "max_m"), "bias_grid.max_m"),
                        positive(require(grid, "bias_grid", "step_m"), "bias_grid.step_m")};

    RegionCheckConfig rc = parse_region_check(root, marks, d);
    return ExperimentConfig{d, lambda, std::move(marks), static_cast<std::size_t>(n), seed, bias, window, workers,
                            std::move(rc)};
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

void print_report(std::ostream& os, const ComparisonReport& r) {
    os << "realizations               " << r.realizations << '\n';
    if (r.simulated) {
        os << "censored realizations      " << r.censored_count << '\n';
        os << "KS empirical vs theorem    " << r.ks_empirical_vs_theorem << '\n';
    }
    os << "max gap theorem vs approx  " << r.max_gap_theorem_vs_approx << '\n';
    os << "expected coverage fraction " << r.coverage_fraction << '\n';
    os << "runtime [s]                " << r.runtime_s << '\n';
}

double max_gap_theorem_vs_approx(const ExperimentConfig& cfg) {
    const NlosModelParams params(cfg.intensity_per_m2, cfg.marks, cfg.separation_m);
    const auto approx = ExpApproxParams::from_model(params);
    double gap = 0.0;
    for (double b : cfg.bias_grid.points()) {
        const double s = cfg.separation_m + b;
        gap = std::max(gap, std::abs(path_length_cdf(params, s) - exp_approx_cdf(approx, s)));
    }
    return gap;
}

ComparisonReport run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, bool simulate) {
    const auto t0 = std::chrono::steady_clock::now();
    const NlosModelParams params(cfg.intensity_per_m2, cfg.marks, cfg.separation_m);
    const auto approx = ExpApproxParams::from_model(params);
    const LinkGeometry link(cfg.separation_m);
    const BooleanModelConfig model = cfg.boolean_model();

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    ComparisonReport report;
    report.simulated = simulate;
    report.coverage_fraction = coverage_fraction(model);
    report.max_gap_theorem_vs_approx = max_gap_theorem_vs_approx(cfg);

    std::optional<EmpiricalCdf> empirical;
    if (simulate) {
        const auto results = simulate_paths(model, link, cfg.realizations, cfg.seed, cfg.workers);
        const auto samples_path = out_dir / "samples.csv";
        auto out = open_for_write(samples_path);
        out << "realization,path_m,bias_m,censored\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            out << i << ',';
            if (results[i].length)
                out << format_number(*results[i].length) << ',' << format_number(*results[i].length - cfg.separation_m)
                    << ",0\n";
            else
                out << ",,1\n";
        }
        finish(out, samples_path);

        empirical = make_empirical_cdf(results);
        report.realizations = results.size();
        report.censored_count = empirical->censored();
        report.ks_empirical_vs_theorem =
            ks_distance(*empirical, [&](double s) { return path_length_cdf(params, s); }, cfg.separation_m,
                        cfg.separation_m + cfg.bias_grid.max_m);
    }

    const auto curves_path = out_dir / "curves.csv";
    auto curves = open_for_write(curves_path);
    curves << "bias_m,cdf_theorem2,cdf_exp_approx,cdf_empirical\n";
    for (double b : cfg.bias_grid.points()) {
        const double s = cfg.separation_m + b;
        curves << format_number(b) << ',' << format_number(path_length_cdf(params, s)) << ','
               << format_number(exp_approx_cdf(approx, s)) << ',';
        if (empirical)
            curves << format_number(empirical->evaluate(s));
        curves << '\n';
    }
    finish(curves, curves_path);

    report.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const auto report_path = out_dir / "report.json";
    auto rj = open_for_write(report_path);
    json j{{"realizations", report.realizations},
           {"max_gap_theorem_vs_approx", report.max_gap_theorem_vs_approx},
           {"coverage_fraction", report.coverage_fraction},
           {"runtime_s", report.runtime_s}};
    if (simulate) {
        j["ks_empirical_vs_theorem"] = report.ks_empirical_vs_theorem;
        j["censored_count"] = report.censored_count;
    }
    rj << j.dump(2) << '\n';
    finish(rj, report_path);
    return report;
}

double RegionCheckRow::z_score() const {
    const double diff = estimate.area - closed_form;
    if (estimate.std_error > 0.0)
        return diff / estimate.std_error;
    return diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
}

std::vector<RegionCheckRow> validate_region(const ExperimentConfig& cfg) {
    const auto& rc = cfg.region_check;
    std::vector<RegionCheckRow> rows;
    std::uint64_t index = 0;
    for (double w : rc.widths_m)
        for (double t : rc.orientations_rad)
            for (double s : rc.path_bounds_m) {
                const RegionSpec spec(w, t, s, cfg.separation_m);
                Rng rng = substream(rc.seed, index++);
                rows.push_back({w, t, s, region_measure(spec), estimate_region_area(spec, rc.samples, rng)});
            }
    return rows;
}

}  // namespace nlos
