#include "nlos/geometry.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nlos {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Below this distance from 0 or pi/2 an orientation is treated as axis-aligned.
constexpr double kOrientationGuard = 1e-12;

}  // namespace

Segment2::Segment2(Point2 p0, Point2 p1) : p0_(p0), p1_(p1) {
    if (!std::isfinite(p0.x) || !std::isfinite(p0.y) || !std::isfinite(p1.x) || !std::isfinite(p1.y))
        throw std::invalid_argument("segment endpoints must be finite");
    if (p0 == p1)
        throw std::invalid_argument("segment must have positive length");
}

Point2 Segment2::right_normal() const {
    const Point2 t = p1_ - p0_;
    const double len = t.norm();
    return {t.y / len, -t.x / len};
}

LinkGeometry::LinkGeometry(double separation) : d_(separation) {
    if (!(separation > 0.0) || !std::isfinite(separation))
        throw std::invalid_argument("link separation must be positive and finite, got " + std::to_string(separation));
}

double normalize_orientation(double radians) {
    if (!std::isfinite(radians))
        throw std::invalid_argument("orientation must be finite");
    double t = std::fmod(radians, kHalfPi);
    if (t < 0.0)
        t += kHalfPi;
    if (t <= kOrientationGuard || t >= kHalfPi - kOrientationGuard)
        throw std::invalid_argument("orientation must not be a multiple of pi/2, got " + std::to_string(radians));
    return t;
}

SquareReflector::SquareReflector(Point2 center, double width, double orientation)
    : center_(center), width_(width), orientation_(normalize_orientation(orientation)) {
    if (!std::isfinite(center.x) || !std::isfinite(center.y))
        throw std::invalid_argument("reflector center must be finite");
    if (!(width > 0.0) || !std::isfinite(width))
        throw std::invalid_argument("reflector width must be positive and finite, got " + std::to_string(width));
}

const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::I: return "I";
        case Quadrant::II: return "II";
        case Quadrant::III: return "III";
        case Quadrant::IV: return "IV";
    }
    return "?";
}

Quadrant quadrant_of(const Point2& p) {
    if (p.y >= 0.0)
        return p.x > 0.0 ? Quadrant::I : (p.y > 0.0 ? Quadrant::II : Quadrant::III);
    return p.x >= 0.0 ? Quadrant::IV : Quadrant::III;
}

std::array<ReflectorEdge, 4> reflector_edges(const SquareReflector& r) {
    const double half = r.width() / 2.0;
    auto make_edge = [&](int k) {
        const double angle = r.orientation() + k * kHalfPi;
        const Point2 omega{half * std::cos(angle), half * std::sin(angle)};
        const Point2 outward{-std::cos(angle), -std::sin(angle)};
        const Point2 tangent{-outward.y, outward.x};
        const Point2 mid = r.center() - omega;
        return ReflectorEdge{static_cast<Quadrant>(k), Segment2(mid - tangent * half, mid + tangent * half), omega};
    };
    return {make_edge(0), make_edge(1), make_edge(2), make_edge(3)};
}

ReflectionHyperbola::ReflectionHyperbola(double orientation, double separation)
    : theta_(normalize_orientation(orientation)), d_(separation) {
    if (!(separation > 0.0) || !std::isfinite(separation))
        throw std::invalid_argument("hyperbola separation must be positive and finite");
}

double hyperbola_residual(const ReflectionHyperbola& h, const Point2& p) {
    const double two_theta = 2.0 * h.orientation();
    const double cot2 = std::cos(two_theta) / std::sin(two_theta);
    const double d = h.separation();
    return p.y * p.y - p.x * p.x + 2.0 * cot2 * p.x * p.y + d * d / 4.0;
}

std::optional<Point2> hyperbola_point_polar(const ReflectionHyperbola& h, double alpha) {
    const double theta = h.orientation();
    const double d = h.separation();
    const double denom = std::sin(2.0 * alpha - 2.0 * theta);
    if (std::abs(denom) < 1e-14)
        return std::nullopt;
    const double ell = d * std::sin(alpha - 2.0 * theta) / denom;
    if (ell < 0.0)
        return std::nullopt;
    // The polar frame has its origin at the base station.
    return Point2{ell * std::cos(alpha) - d / 2.0, ell * std::sin(alpha)};
}

std::optional<SpecularPath> specular_path(const LinkGeometry& link, const Segment2& edge) {
    const Point2 b = link.base_station();
    const Point2 m = link.mobile();
    const Point2 n = edge.right_normal();
    const Point2 origin = edge.start();

    const double side_b = (b - origin).dot(n);
    const double side_m = (m - origin).dot(n);
    if (!(side_b * side_m > 0.0))
        return std::nullopt;

    const Point2 image = b - n * (2.0 * side_b);
    // image and m sit on opposite sides, so the crossing parameter is in (0, 1)
    const double t = side_b / (side_b + side_m);
    const Point2 hit = image + (m - image) * t;

    const Point2 along = edge.end() - edge.start();
    const double u = (hit - origin).dot(along) / along.dot(along);
    if (u < 0.0 || u > 1.0)
        return std::nullopt;

    return SpecularPath{hit, distance(image, m)};
}

std::vector<ReflectorPath> reflector_paths(const LinkGeometry& link, const SquareReflector& r) {
    std::vector<ReflectorPath> out;
    const Point2 b = link.base_station();
    for (const auto& e : reflector_edges(r)) {
        // Only the outer face reflects: b (and hence m, via specular_path)
        // must lie on the side the outward normal points to.
        const Point2 n = e.segment.right_normal();
        if ((b - e.segment.start()).dot(n) <= 0.0)
            continue;
        if (auto p = specular_path(link, e.segment))
            out.push_back({e.label, *p});
    }
    return out;
}

std::optional<ReflectorPath> shortest_reflector_path(const LinkGeometry& link, const SquareReflector& r) {
    std::optional<ReflectorPath> best;
    for (const auto& rp : reflector_paths(link, r))
        if (!best || rp.path.length < best->path.length)
            best = rp;
    return best;
}

}  // namespace nlos
