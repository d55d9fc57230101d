// Command-line front end: run the Monte Carlo comparison, emit the analytic
// curves only, or check the reflection-region closed form against sampling.

#include "nlos/experiment.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <numbers>

namespace {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kConfigError = 2,
    kIoError = 3,
    kDomainError = 4,
};

int run_region_check(const nlos::ExperimentConfig& cfg) {
    const auto rows = nlos::validate_region(cfg);
    const double limit = cfg.region_check.sigma_limit;
    std::size_t failed = 0;
    std::cout << "width_m  orient_deg  path_m   closed_form    estimate       std_err    z\n";
    for (const auto& r : rows) {
        const bool ok = std::abs(r.z_score()) <= limit;
        failed += ok ? 0 : 1;
        std::cout << std::fixed << std::setprecision(2) << std::setw(7) << r.width << "  " << std::setw(10)
                  << r.orientation * 180.0 / std::numbers::pi << "  " << std::setw(7) << r.path_bound << "  "
                  << std::setw(12) << r.closed_form << "  " << std::setw(12) << r.estimate.area << "  " << std::setw(9)
                  << r.estimate.std_error << "  " << std::setw(6) << r.z_score() << (ok ? "" : "  FAIL") << '\n';
    }
    std::cout << (rows.size() - failed) << "/" << rows.size() << " specs within " << limit << " standard errors\n";
    return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First-arriving NLOS path length: closed form vs Boolean-model Monte Carlo"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> realizations;
    std::optional<unsigned> workers;

    auto* run = app.add_subcommand("run", "simulate and compare against the closed forms");
    run->add_option("--config", config_path, "experiment config (JSON)")->required();
    run->add_option("--out", out_dir, "output directory")->required();
    run->add_option("--seed", seed, "override simulation.seed");
    run->add_option("--realizations", realizations, "override simulation.realizations")->check(CLI::PositiveNumber);
    run->add_option("--workers", workers, "override simulation.workers")->check(CLI::PositiveNumber);

    auto* analytic = app.add_subcommand("analytic", "write the closed-form curves only");
    analytic->add_option("--config", config_path, "experiment config (JSON)")->required();
    analytic->add_option("--out", out_dir, "output directory")->required();

    auto* region = app.add_subcommand("validate-region", "check region areas against rejection sampling");
    region->add_option("--config", config_path, "experiment config (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        auto cfg = nlos::load_config(config_path);
        if (seed)
            cfg.seed = *seed;
        if (realizations)
            cfg.realizations = *realizations;
        if (workers)
            cfg.workers = *workers;

        if (region->parsed())
            return run_region_check(cfg);

        const auto report = nlos::run_experiment(cfg, out_dir, run->parsed());
        nlos::print_report(std::cout, report);
        return kOk;
    } catch (const nlos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const nlos::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
}
