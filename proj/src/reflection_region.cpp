#include "nlos/reflection_region.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlos {

namespace {

void require_separation(double d) {
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("separation must be positive and finite, got " + std::to_string(d));
}

// sqrt(s^2 - d^2 t^2) - d t' with t^2 + t'^2 = 1, rewritten to avoid
// cancellation as s -> d.
double excess(double s, double d, double t, double t_complement) {
    const double root = std::sqrt(s * s - d * d * t * t);
    return (s - d) * (s + d) / (root + d * t_complement);
}

}  // namespace

BoundaryEllipse::BoundaryEllipse(double path_length, double separation) : s_(path_length), d_(separation) {
    require_separation(separation);
    if (!(path_length > separation) || !std::isfinite(path_length))
        throw std::invalid_argument("boundary ellipse needs s > d");
}

double BoundaryEllipse::residual(const Point2& p) const {
    const double u = semi_major();
    const double v = semi_minor();
    return p.x * p.x / (u * u) + p.y * p.y / (v * v) - 1.0;
}

GammaPoints gamma_points(double orientation, double path_length, double separation) {
    require_separation(separation);
    const double s = path_length;
    const double d = separation;
    if (!(s > d) || !std::isfinite(s))
        throw std::invalid_argument("gamma points need s > d, got s=" + std::to_string(s) + " d=" + std::to_string(d));
    const double theta = normalize_orientation(orientation);
    if (std::abs(theta - orientation) > 1e-15)
        throw std::invalid_argument("gamma points need 0 < theta < pi/2");

    const BoundaryEllipse ellipse(s, d);
    const double u = ellipse.semi_major();
    const double v = ellipse.semi_minor();
    const double sin_t = std::sin(theta);
    const double cos_t = std::cos(theta);
    const double s2 = s * s;
    const double d2 = d * d;

    // z = x^2 at the intersection; u^2 - z is taken in closed form to keep
    // the y-coordinate accurate when z approaches u^2.
    const double denom_13 = s2 - d2 * sin_t * sin_t;  // sin^2 (s^2 csc^2 - d^2)
    const double denom_24 = s2 - d2 * cos_t * cos_t;  // cos^2 (s^2 sec^2 - d^2)
    const double z_13 = s2 * s2 * cos_t * cos_t / (4.0 * denom_13);
    const double z_24 = s2 * s2 * sin_t * sin_t / (4.0 * denom_24);
    const double rest_13 = s2 * (s2 - d2) * sin_t * sin_t / (4.0 * denom_13);
    const double rest_24 = s2 * (s2 - d2) * cos_t * cos_t / (4.0 * denom_24);

    for (double value : {z_13, z_24, rest_13, rest_24})
        if (!(value >= 0.0) || !std::isfinite(value))
            throw std::domain_error("no real hyperbola/ellipse intersection at theta=" + std::to_string(theta));

    const Point2 g1{std::sqrt(z_13), v / u * std::sqrt(rest_13)};
    const Point2 g2{-std::sqrt(z_24), v / u * std::sqrt(rest_24)};
    return GammaPoints{{g1, g2, -g1, -g2}};
}

double strip_area(double a, double b, double h) {
    if (!(b > a))
        throw std::invalid_argument("strip needs b > a");
    if (!(h > 0.0))
        throw std::invalid_argument("strip needs h > 0");
    return h * (b - a);
}

RegionSpec::RegionSpec(double width, double orientation, double path_length, double separation)
    : w_(width), theta_(normalize_orientation(orientation)), s_(path_length), d_(separation) {
    require_separation(separation);
    if (!(width > 0.0) || !std::isfinite(width))
        throw std::invalid_argument("region width must be positive, got " + std::to_string(width));
    if (!(path_length >= separation) || !std::isfinite(path_length))
        throw std::invalid_argument("region path bound must satisfy s >= d, got s=" + std::to_string(path_length));
}

std::array<double, 4> region_measure_quadrants(const RegionSpec& spec) {
    const double s = spec.path_length();
    const double d = spec.separation();
    const double sin_t = std::sin(spec.orientation());
    const double cos_t = std::cos(spec.orientation());
    const double half_w = spec.width() / 2.0;
    const double q1 = half_w * excess(s, d, sin_t, cos_t);
    const double q4 = half_w * excess(s, d, cos_t, sin_t);
    return {q1, q4, q1, q4};
}

double region_measure(const RegionSpec& spec) {
    const double s = spec.path_length();
    const double d = spec.separation();
    const double sin_t = std::sin(spec.orientation());
    const double cos_t = std::cos(spec.orientation());
    return spec.width() * (excess(s, d, sin_t, cos_t) + excess(s, d, cos_t, sin_t));
}

double region_measure_slope(const RegionSpec& spec) {
    const double s = spec.path_length();
    const double d = spec.separation();
    if (!(s > d))
        throw std::invalid_argument("region slope needs s > d");
    const double sin_t = std::sin(spec.orientation());
    const double cos_t = std::cos(spec.orientation());
    return spec.width() * (s / std::sqrt(s * s - d * d * sin_t * sin_t) + s / std::sqrt(s * s - d * d * cos_t * cos_t));
}

bool region_contains(const Point2& center, double width, double orientation, double path_length,
                     const LinkGeometry& link) {
    const SquareReflector r(center, width, orientation);
    for (const auto& rp : reflector_paths(link, r))
        if (rp.path.length <= path_length)
            return true;
    return false;
}

Rect region_bounding_box(const RegionSpec& spec) {
    const double u = spec.path_length() / 2.0;
    const double d = spec.separation();
    const double s = spec.path_length();
    const double v = std::sqrt(s * s - d * d) / 2.0;
    const double r = spec.width() * std::sqrt(2.0) / 2.0;
    return {-u - r, u + r, -v - r, v + r};
}

AreaEstimate estimate_region_area(const RegionSpec& spec, std::uint64_t samples, Rng& rng,
                                  std::optional<Quadrant> quadrant) {
    if (samples == 0)
        throw std::invalid_argument("area estimate needs at least one sample");
    const LinkGeometry link(spec.separation());
    const Rect box = region_bounding_box(spec);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const Point2 c{box.x_min + box.width() * uniform01(rng), box.y_min + box.height() * uniform01(rng)};
        const SquareReflector r(c, spec.width(), spec.orientation());
        for (const auto& rp : reflector_paths(link, r)) {
            if (rp.path.length > spec.path_length())
                continue;
            if (quadrant && quadrant_of(rp.path.point) != *quadrant)
                continue;
            ++hits;
            break;
        }
    }
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(hits) / n;
    return {box.area() * p, box.area() * std::sqrt(p * (1.0 - p) / n), hits, samples};
}

}  // namespace nlos
