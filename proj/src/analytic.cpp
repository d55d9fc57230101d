#include "nlos/analytic.hpp"

#include "nlos/reflection_region.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nlos {

NlosModelParams::NlosModelParams(double intensity, MarkDistribution marks, double separation)
    : lambda_(intensity), marks_(std::move(marks)), d_(separation) {
    if (!(intensity > 0.0) || !std::isfinite(intensity))
        throw std::invalid_argument("intensity must be positive, got " + std::to_string(intensity));
    if (!(separation > 0.0) || !std::isfinite(separation))
        throw std::invalid_argument("separation must be positive, got " + std::to_string(separation));
}

double void_exponent(const NlosModelParams& p, double s) {
    if (!(s > p.separation()))
        return 0.0;
    if (std::isinf(s))
        return std::numeric_limits<double>::infinity();
    const auto& marks = p.marks();
    double sum = 0.0;
    for (std::size_t k = 0; k < marks.num_classes(); ++k) {
        if (marks.pmf()[k] == 0.0)
            continue;
        sum += marks.pmf()[k] *
               region_measure(RegionSpec(marks.width_of_class(k), marks.orientation_of_class(k), s, p.separation()));
    }
    return p.intensity() * sum;
}

double path_length_cdf(const NlosModelParams& p, double s) { return -std::expm1(-void_exponent(p, s)); }

double path_length_survival(const NlosModelParams& p, double s) { return std::exp(-void_exponent(p, s)); }

double path_length_hazard(const NlosModelParams& p, double s) {
    if (!(s > p.separation()))
        throw std::invalid_argument("density is defined for s > d only");
    const auto& marks = p.marks();
    double sum = 0.0;
    for (std::size_t k = 0; k < marks.num_classes(); ++k) {
        if (marks.pmf()[k] == 0.0)
            continue;
        sum += marks.pmf()[k] * region_measure_slope(RegionSpec(marks.width_of_class(k), marks.orientation_of_class(k),
                                                                s, p.separation()));
    }
    return p.intensity() * sum;
}

double path_length_pdf(const NlosModelParams& p, double s) {
    return path_length_hazard(p, s) * path_length_survival(p, s);
}

double path_length_quantile(const NlosModelParams& p, double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("quantile level must be in [0, 1)");
    const double d = p.separation();
    if (u == 0.0)
        return d;

    // Grow the bracket geometrically in bias until the CDF passes u.
    double lo = d;
    double step = d;
    double hi = d + step;
    while (path_length_cdf(p, hi) < u) {
        lo = hi;
        step *= 2.0;
        hi = d + step;
    }
    const auto f = [&](double s) { return path_length_cdf(p, s) - u; };
    const auto done = [](double a, double b) { return b - a <= 1e-9; };
    const auto [a, b] = boost::math::tools::bisect(f, lo, hi, done);
    const double s = 0.5 * (a + b);
    return s > d ? s : std::nextafter(d, std::numeric_limits<double>::infinity());
}

double sample_path_length(const NlosModelParams& p, Rng& rng) {
    return path_length_quantile(p, uniform01(rng));
}

ExpApproxParams::ExpApproxParams(double rate, double separation) : rate_(rate), d_(separation) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw std::invalid_argument("exponential rate must be positive, got " + std::to_string(rate));
    if (!(separation > 0.0) || !std::isfinite(separation))
        throw std::invalid_argument("separation must be positive, got " + std::to_string(separation));
}

ExpApproxParams ExpApproxParams::from_model(const NlosModelParams& p) {
    return ExpApproxParams(2.0 * p.intensity() * p.marks().mean_width(), p.separation());
}

double exp_approx_cdf(const ExpApproxParams& a, double s) {
    if (!(s > a.separation()))
        return 0.0;
    return -std::expm1(-a.rate() * (s - a.separation()));
}

double bias_from_path(double s, double d) {
    if (!(s > d))
        throw std::invalid_argument("path length must exceed the separation");
    return s - d;
}

}  // namespace nlos
