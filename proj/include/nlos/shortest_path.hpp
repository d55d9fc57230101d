#pragma once
/**
 * @file shortest_path.hpp
 * @brief Monte Carlo estimate of the first-arriving NLOS path length.
 */

#include "nlos/boolean_model.hpp"
#include "nlos/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace nlos {

struct NlosPathResult {
    std::optional<double> length;
    std::optional<Point2> reflecting_point;
    std::optional<std::size_t> reflector_index;

    [[nodiscard]] bool censored() const { return !length.has_value(); }
};

/// Shortest valid first-order path over every reflector's four edges.
[[nodiscard]] NlosPathResult shortest_nlos_path(const Realization& realization, const LinkGeometry& link);

/**
 * Empirical CDF of the path length. Realizations without any path stay in the
 * denominator: evaluate(s) = #(samples <= s) / (#samples + censored).
 */
class EmpiricalCdf {
public:
    EmpiricalCdf(std::vector<double> samples, std::size_t censored);

    [[nodiscard]] double evaluate(double s) const;
    [[nodiscard]] const std::vector<double>& samples() const { return samples_; }
    [[nodiscard]] std::size_t censored() const { return censored_; }
    [[nodiscard]] std::size_t total() const { return samples_.size() + censored_; }

private:
    std::vector<double> samples_;
    std::size_t censored_;
};

/// One result per realization index; the output does not depend on @p workers.
[[nodiscard]] std::vector<NlosPathResult> simulate_paths(const BooleanModelConfig& cfg, const LinkGeometry& link,
                                                         std::size_t realizations, std::uint64_t seed,
                                                         unsigned workers = 1);

[[nodiscard]] EmpiricalCdf make_empirical_cdf(const std::vector<NlosPathResult>& results);

[[nodiscard]] EmpiricalCdf empirical_cdf(const BooleanModelConfig& cfg, const LinkGeometry& link,
                                         std::size_t realizations, std::uint64_t seed, unsigned workers = 1);

/**
 * sup |F_emp(s) - F(s)| over s in [lo, hi], taken exactly at both sides of
 * every jump of the empirical CDF and at the interval ends. F must be
 * continuous and nondecreasing.
 */
[[nodiscard]] double ks_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf, double lo,
                                 double hi);

}  // namespace nlos
