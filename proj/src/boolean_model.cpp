#include "nlos/boolean_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace nlos {

MarkDistribution::MarkDistribution(std::vector<double> widths, std::vector<double> orientations,
                                   std::vector<double> pmf)
    : widths_(std::move(widths)), orientations_(std::move(orientations)), pmf_(std::move(pmf)) {
    if (widths_.empty() || orientations_.empty())
        throw std::invalid_argument("mark distribution needs at least one width and one orientation");
    for (double w : widths_)
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("mark widths must be positive and finite, got " + std::to_string(w));
    for (double t : orientations_)
        if (normalize_orientation(t) != t)
            throw std::invalid_argument("mark orientations must lie in (0, pi/2), got " + std::to_string(t));
    if (pmf_.size() != widths_.size() * orientations_.size())
        throw std::invalid_argument("pmf must have " + std::to_string(widths_.size() * orientations_.size()) +
                                    " entries, got " + std::to_string(pmf_.size()));
    for (double p : pmf_)
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("pmf entries must be non-negative");
    const double total = std::accumulate(pmf_.begin(), pmf_.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12)
        throw std::invalid_argument("pmf must sum to 1, sums to " + std::to_string(total));
}

MarkDistribution MarkDistribution::uniform(std::vector<double> widths, std::vector<double> orientations) {
    const std::size_t n = widths.size() * orientations.size();
    std::vector<double> pmf(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
    return MarkDistribution(std::move(widths), std::move(orientations), std::move(pmf));
}

double MarkDistribution::mean_width() const {
    double m = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k)
        m += pmf_[k] * width_of_class(k);
    return m;
}

double MarkDistribution::mean_squared_width() const {
    double m = 0.0;
    for (std::size_t k = 0; k < pmf_.size(); ++k)
        m += pmf_[k] * width_of_class(k) * width_of_class(k);
    return m;
}

double MarkDistribution::max_width() const { return *std::max_element(widths_.begin(), widths_.end()); }

void BooleanModelConfig::validate() const {
    if (!(intensity > 0.0) || !std::isfinite(intensity))
        throw std::invalid_argument("intensity must be positive, got " + std::to_string(intensity));
    if (!(window.width() > 0.0) || !(window.height() > 0.0) || !std::isfinite(window.area()))
        throw std::invalid_argument("window must have positive finite area");
}

Realization sample_realization(const BooleanModelConfig& cfg, Rng& rng) {
    std::poisson_distribution<std::size_t> count_dist(cfg.intensity * cfg.window.area());
    std::discrete_distribution<std::size_t> mark_dist(cfg.marks.pmf().begin(), cfg.marks.pmf().end());

    const std::size_t n = count_dist(rng);
    Realization out;
    out.reflectors.reserve(n);
    out.mark_class.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 c{cfg.window.x_min + cfg.window.width() * uniform01(rng),
                       cfg.window.y_min + cfg.window.height() * uniform01(rng)};
        const std::size_t k = mark_dist(rng);
        out.reflectors.emplace_back(c, cfg.marks.width_of_class(k), cfg.marks.orientation_of_class(k));
        out.mark_class.push_back(k);
    }
    return out;
}

double coverage_fraction(const BooleanModelConfig& cfg) {
    return -std::expm1(-cfg.intensity * cfg.marks.mean_squared_width());
}

Rect truncation_window(double max_path_length, double separation, double max_width) {
    return region_bounding_box(RegionSpec(max_width, 0.25 * std::numbers::pi, max_path_length, separation));
}

}  // namespace nlos
