#pragma once
/**
 * @file analytic.hpp
 * @brief Closed-form distribution of the first-arriving NLOS path length S.
 *
 * With reflector marks independently thinning the center process, S exceeds
 * s exactly when every thinned process leaves its reflection region empty, so
 *
 *     P[S > s] = exp(-lambda * sum_ij f(w_i, theta_j) * area(w_i, theta_j, s)),
 *
 * on support (d, inf). The bias is B = S - d.
 */

#include "nlos/boolean_model.hpp"
#include "nlos/random.hpp"

namespace nlos {

class NlosModelParams {
public:
    NlosModelParams(double intensity, MarkDistribution marks, double separation);

    [[nodiscard]] double intensity() const { return lambda_; }
    [[nodiscard]] const MarkDistribution& marks() const { return marks_; }
    [[nodiscard]] double separation() const { return d_; }

private:
    double lambda_;
    MarkDistribution marks_;
    double d_;
};

/// lambda * sum f * area at path bound s; 0 for s <= d.
[[nodiscard]] double void_exponent(const NlosModelParams& p, double s);

/// P[S <= s].
[[nodiscard]] double path_length_cdf(const NlosModelParams& p, double s);

/// P[S > s], accurate far into the tail where 1 - cdf underflows.
[[nodiscard]] double path_length_survival(const NlosModelParams& p, double s);

/// Exact density; throws std::invalid_argument for s <= d.
[[nodiscard]] double path_length_pdf(const NlosModelParams& p, double s);

/// pdf / survival, the slope of void_exponent.
[[nodiscard]] double path_length_hazard(const NlosModelParams& p, double s);

/// Inverse-transform draw of S: bisection on the CDF to 1e-9 m.
[[nodiscard]] double sample_path_length(const NlosModelParams& p, Rng& rng);

/// Solves cdf(s) = u for u in [0, 1).
[[nodiscard]] double path_length_quantile(const NlosModelParams& p, double u);

class ExpApproxParams {
public:
    ExpApproxParams(double rate, double separation);

    /// rate = 2 lambda E[W], anchored so the support still starts at d.
    static ExpApproxParams from_model(const NlosModelParams& p);

    [[nodiscard]] double rate() const { return rate_; }
    [[nodiscard]] double separation() const { return d_; }

private:
    double rate_;
    double d_;
};

/// 1 - exp(-rate (s - d)) for s > d, else 0.
[[nodiscard]] double exp_approx_cdf(const ExpApproxParams& a, double s);

/// s - d; throws std::invalid_argument for s <= d.
[[nodiscard]] double bias_from_path(double s, double d);

}  // namespace nlos
