#pragma once
/**
 * @file reflection_region.hpp
 * @brief Closed-form reflection-region machinery and its sampling oracle.
 *
 * For a square reflector of width w and orientation theta, the reflection
 * region is the set of reflector centers that yield a first-order path of
 * length at most s. Its area has a closed form built from four quadrant
 * pieces, each a strip of height w swept along an arc of the reflection
 * hyperbola that ends where the hyperbola meets the boundary ellipse.
 */

#include "nlos/geometry.hpp"
#include "nlos/random.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace nlos {

/// Ellipse with foci at the link endpoints; every single-bounce path off a
/// point on it has length exactly s.
class BoundaryEllipse {
public:
    BoundaryEllipse(double path_length, double separation);

    [[nodiscard]] double path_length() const { return s_; }
    [[nodiscard]] double separation() const { return d_; }
    [[nodiscard]] double semi_major() const { return s_ / 2.0; }
    [[nodiscard]] double semi_minor() const { return std::sqrt(s_ * s_ - d_ * d_) / 2.0; }
    /// x^2/u^2 + y^2/v^2 - 1
    [[nodiscard]] double residual(const Point2& p) const;
    [[nodiscard]] bool contains(const Point2& p) const { return residual(p) <= 0.0; }

private:
    double s_;
    double d_;
};

/// Intersections of the reflection hyperbola with the boundary ellipse,
/// indexed by the quadrant they sit in.
struct GammaPoints {
    std::array<Point2, 4> points;

    [[nodiscard]] const Point2& operator[](Quadrant q) const { return points[index_of(q)]; }
};

/// Throws std::invalid_argument unless s > d > 0 and 0 < theta < pi/2, and
/// std::domain_error if the closed forms produce no real intersection.
[[nodiscard]] GammaPoints gamma_points(double orientation, double path_length, double separation);

/// Area swept by a vertical segment of height h moving along any graph over [a, b].
[[nodiscard]] double strip_area(double a, double b, double h);

class RegionSpec {
public:
    RegionSpec(double width, double orientation, double path_length, double separation);

    [[nodiscard]] double width() const { return w_; }
    [[nodiscard]] double orientation() const { return theta_; }
    [[nodiscard]] double path_length() const { return s_; }
    [[nodiscard]] double separation() const { return d_; }

private:
    double w_;
    double theta_;
    double s_;
    double d_;
};

/**
 * Area of the reflection region,
 * w [ sqrt(s^2 - d^2 sin^2 theta) - d (sin theta + cos theta) + sqrt(s^2 - d^2 cos^2 theta) ].
 *
 * RegionSpec accepts s = d, where the area is exactly zero.
 */
[[nodiscard]] double region_measure(const RegionSpec& spec);

/// Per-quadrant areas (I, II, III, IV); I equals III and II equals IV.
[[nodiscard]] std::array<double, 4> region_measure_quadrants(const RegionSpec& spec);

/// d/ds of region_measure. Requires s > d.
[[nodiscard]] double region_measure_slope(const RegionSpec& spec);

/// True iff a reflector at @p center has a first-order path of length <= s.
[[nodiscard]] bool region_contains(const Point2& center, double width, double orientation, double path_length,
                                   const LinkGeometry& link);

struct Rect {
    double x_min{0.0};
    double x_max{0.0};
    double y_min{0.0};
    double y_max{0.0};

    [[nodiscard]] double width() const { return x_max - x_min; }
    [[nodiscard]] double height() const { return y_max - y_min; }
    [[nodiscard]] double area() const { return width() * height(); }
    [[nodiscard]] bool contains(const Point2& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
};

/// Smallest axis-aligned box guaranteed to contain the reflection region:
/// the box of the ellipse inflated by the reflector half-diagonal.
[[nodiscard]] Rect region_bounding_box(const RegionSpec& spec);

struct AreaEstimate {
    double area;
    double std_error;
    std::uint64_t hits;
    std::uint64_t samples;
};

/**
 * Rejection-sampling estimate of the reflection-region area. Centers are drawn
 * uniformly on region_bounding_box and tested with the image method. With
 * @p quadrant set, only paths whose reflection point lies in that quadrant count.
 */
[[nodiscard]] AreaEstimate estimate_region_area(const RegionSpec& spec, std::uint64_t samples, Rng& rng,
                                                std::optional<Quadrant> quadrant = std::nullopt);

}  // namespace nlos
