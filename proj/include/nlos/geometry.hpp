#pragma once
/**
 * @file geometry.hpp
 * @brief 2-D primitives for the single-link reflection model.
 *
 * The link is always placed on the x-axis with the base station at
 * (-d/2, 0) and the mobile at (d/2, 0). Square reflectors carry four labelled
 * edges; edge k is the one facing away from the center-displacement vector
 * omega_k, and omega_I always points along the reflector orientation.
 *
 * All functions here are pure.
 */

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace nlos {

struct Point2 {
    double x{0.0};
    double y{0.0};

    constexpr Point2() = default;
    constexpr Point2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Point2 operator+(const Point2& r) const { return {x + r.x, y + r.y}; }
    constexpr Point2 operator-(const Point2& r) const { return {x - r.x, y - r.y}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Point2 operator*(double s, const Point2& p) { return {p.x * s, p.y * s}; }
    constexpr bool operator==(const Point2&) const = default;

    [[nodiscard]] constexpr double dot(const Point2& r) const { return x * r.x + y * r.y; }
    [[nodiscard]] constexpr double cross(const Point2& r) const { return x * r.y - y * r.x; }
    [[nodiscard]] double norm() const { return std::hypot(x, y); }
};

[[nodiscard]] inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

/// Closed segment with positive length.
class Segment2 {
public:
    Segment2(Point2 p0, Point2 p1);

    [[nodiscard]] const Point2& start() const { return p0_; }
    [[nodiscard]] const Point2& end() const { return p1_; }
    [[nodiscard]] Point2 midpoint() const { return (p0_ + p1_) * 0.5; }
    [[nodiscard]] double length() const { return distance(p0_, p1_); }
    /// Unit normal on the right of the p0 -> p1 direction.
    [[nodiscard]] Point2 right_normal() const;

private:
    Point2 p0_;
    Point2 p1_;
};

/// Base station and mobile separated by d on the x-axis, centered at the origin.
class LinkGeometry {
public:
    explicit LinkGeometry(double separation);

    [[nodiscard]] double separation() const { return d_; }
    [[nodiscard]] Point2 base_station() const { return {-d_ / 2.0, 0.0}; }
    [[nodiscard]] Point2 mobile() const { return {d_ / 2.0, 0.0}; }

private:
    double d_;
};

/// Maps an angle onto (0, pi/2) modulo pi/2; throws std::invalid_argument on
/// non-finite input or on multiples of pi/2.
[[nodiscard]] double normalize_orientation(double radians);

class SquareReflector {
public:
    SquareReflector(Point2 center, double width, double orientation);

    [[nodiscard]] const Point2& center() const { return center_; }
    [[nodiscard]] double width() const { return width_; }
    [[nodiscard]] double orientation() const { return orientation_; }

private:
    Point2 center_;
    double width_;
    double orientation_;
};

enum class Quadrant { I = 0, II = 1, III = 2, IV = 3 };

[[nodiscard]] constexpr std::size_t index_of(Quadrant q) { return static_cast<std::size_t>(q); }
[[nodiscard]] const char* to_string(Quadrant q);
/// Quadrant containing p; points on an axis go to the counterclockwise-next one.
[[nodiscard]] Quadrant quadrant_of(const Point2& p);

struct ReflectorEdge {
    Quadrant label;
    Segment2 segment;      ///< traversed counterclockwise, so the outward normal is on the right
    Point2 displacement;   ///< omega: from the edge midpoint to the reflector center
};

/// Edges I..IV of the square, counterclockwise from the one opposite omega_I.
[[nodiscard]] std::array<ReflectorEdge, 4> reflector_edges(const SquareReflector& r);

/// Locus of potential reflection points for reflectors of one orientation.
class ReflectionHyperbola {
public:
    ReflectionHyperbola(double orientation, double separation);

    [[nodiscard]] double orientation() const { return theta_; }
    [[nodiscard]] double separation() const { return d_; }

private:
    double theta_;
    double d_;
};

/// y^2 - x^2 + 2 cot(2 theta) x y + d^2/4; zero exactly on the hyperbola.
[[nodiscard]] double hyperbola_residual(const ReflectionHyperbola& h, const Point2& p);

/// Point of the hyperbola on the ray at angle alpha from the base station, in
/// link coordinates. Empty when the polar radius is negative or undefined.
[[nodiscard]] std::optional<Point2> hyperbola_point_polar(const ReflectionHyperbola& h, double alpha);

struct SpecularPath {
    Point2 point;   ///< reflection point on the edge
    double length;  ///< |b -> point| + |point -> m|
};

/**
 * Single-bounce path from base station to mobile off @p edge, built with the
 * image method: b is mirrored across the edge's supporting line and the
 * straight image-to-mobile segment is intersected with the edge.
 *
 * Two-sided: either face of the edge may reflect. Empty when b and m are not
 * strictly on the same side of the line or when the crossing falls outside
 * the closed segment.
 */
[[nodiscard]] std::optional<SpecularPath> specular_path(const LinkGeometry& link, const Segment2& edge);

struct ReflectorPath {
    Quadrant edge;
    SpecularPath path;
};

/// Valid first-order paths off the outer faces of @p r (at most one per edge).
[[nodiscard]] std::vector<ReflectorPath> reflector_paths(const LinkGeometry& link, const SquareReflector& r);

/// Shortest of reflector_paths, if any.
[[nodiscard]] std::optional<ReflectorPath> shortest_reflector_path(const LinkGeometry& link, const SquareReflector& r);

}  // namespace nlos
