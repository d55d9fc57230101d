#pragma once
/**
 * @file boolean_model.hpp
 * @brief Boolean model of square reflectors on a finite window.
 *
 * Reflector centers follow a homogeneous Poisson point process; each center
 * carries an independent (width, orientation) mark drawn from a discrete
 * joint pmf.
 */

#include "nlos/geometry.hpp"
#include "nlos/random.hpp"
#include "nlos/reflection_region.hpp"

#include <cstddef>
#include <vector>

namespace nlos {

/// Discrete joint pmf over widths (meters) x orientations (radians), row-major by width.
class MarkDistribution {
public:
    MarkDistribution(std::vector<double> widths, std::vector<double> orientations, std::vector<double> pmf);

    /// Equal mass on every (width, orientation) pair.
    static MarkDistribution uniform(std::vector<double> widths, std::vector<double> orientations);

    [[nodiscard]] const std::vector<double>& widths() const { return widths_; }
    [[nodiscard]] const std::vector<double>& orientations() const { return orientations_; }
    [[nodiscard]] const std::vector<double>& pmf() const { return pmf_; }
    [[nodiscard]] std::size_t num_widths() const { return widths_.size(); }
    [[nodiscard]] std::size_t num_orientations() const { return orientations_.size(); }
    [[nodiscard]] std::size_t num_classes() const { return pmf_.size(); }
    [[nodiscard]] double probability(std::size_t wi, std::size_t ti) const { return pmf_[wi * orientations_.size() + ti]; }
    [[nodiscard]] double width_of_class(std::size_t k) const { return widths_[k / orientations_.size()]; }
    [[nodiscard]] double orientation_of_class(std::size_t k) const { return orientations_[k % orientations_.size()]; }

    [[nodiscard]] double mean_width() const;
    [[nodiscard]] double mean_squared_width() const;
    [[nodiscard]] double max_width() const;

private:
    std::vector<double> widths_;
    std::vector<double> orientations_;
    std::vector<double> pmf_;
};

struct BooleanModelConfig {
    double intensity;  ///< reflector centers per square meter
    Rect window;
    MarkDistribution marks;

    /// Throws std::invalid_argument on a non-positive intensity or an empty window.
    void validate() const;
};

struct Realization {
    std::vector<SquareReflector> reflectors;
    std::vector<std::size_t> mark_class;  ///< flat pmf index per reflector
};

[[nodiscard]] Realization sample_realization(const BooleanModelConfig& cfg, Rng& rng);

/// Expected covered fraction, 1 - exp(-lambda E[W^2]).
[[nodiscard]] double coverage_fraction(const BooleanModelConfig& cfg);

/**
 * Window centered on the link that holds every reflector able to produce a
 * first-order path no longer than @p max_path_length: the ellipse box for
 * that length inflated by the largest reflector half-diagonal.
 */
[[nodiscard]] Rect truncation_window(double max_path_length, double separation, double max_width);

}  // namespace nlos
