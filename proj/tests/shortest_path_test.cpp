#include "nlos/analytic.hpp"
#include "nlos/reflection_region.hpp"
#include "nlos/shortest_path.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace nlos;
using nlos::testing::kPi;

namespace {

// Reflector whose edge e_I is centered on gamma_I of the s-ellipse.
SquareReflector reflector_on_ellipse(double s, double width = 20.0, double theta = kPi / 4) {
    const auto g = gamma_points(theta, s, 300.0);
    const Point2 omega{width / 2 * std::cos(theta), width / 2 * std::sin(theta)};
    return SquareReflector(g[Quadrant::I] + omega, width, theta);
}

MarkDistribution fig5_marks() {
    std::vector<double> orient;
    for (int k = 1; k <= 8; ++k)
        orient.push_back(k * 10.0 * kPi / 180.0);
    return MarkDistribution::uniform({20, 40, 60, 80, 100, 120}, orient);
}

}  // namespace

TEST_CASE("empty realization has no path") {
    const auto r = shortest_nlos_path(Realization{}, LinkGeometry(300.0));
    CHECK(r.censored());
    CHECK_FALSE(r.reflecting_point);
    CHECK_FALSE(r.reflector_index);
}

TEST_CASE("single reflector on the s = 400 ellipse") {
    Realization real;
    real.reflectors.push_back(reflector_on_ellipse(400.0));
    real.mark_class.push_back(0);
    const auto r = shortest_nlos_path(real, LinkGeometry(300.0));
    REQUIRE(r.length);
    CHECK(std::abs(*r.length - 400.0) < 1e-6);
    CHECK(*r.reflector_index == 0);
}

TEST_CASE("shortest path is the minimum over reflectors") {
    Realization real;
    real.reflectors.push_back(reflector_on_ellipse(500.0, 30.0, 0.6));
    real.reflectors.push_back(reflector_on_ellipse(400.0));
    real.mark_class = {0, 0};
    const auto r = shortest_nlos_path(real, LinkGeometry(300.0));
    REQUIRE(r.length);
    CHECK(*r.length == doctest::Approx(400.0).epsilon(1e-12));
    CHECK(*r.reflector_index == 1);

    Realization only_far;
    only_far.reflectors.push_back(real.reflectors[0]);
    only_far.mark_class = {0};
    CHECK(*shortest_nlos_path(only_far, LinkGeometry(300.0)).length == doctest::Approx(500.0).epsilon(1e-12));
}

TEST_CASE("adding a reflector never lengthens the shortest path") {
    const LinkGeometry link(300.0);
    const BooleanModelConfig cfg{2e-5, truncation_window(1800.0, 300.0, 120.0), fig5_marks()};
    for (int i = 0; i < 200; ++i) {
        Rng rng = substream(41, i);
        Realization real = sample_realization(cfg, rng);
        const auto before = shortest_nlos_path(real, link);
        const Realization extra = sample_realization(cfg, rng);
        for (std::size_t k = 0; k < extra.reflectors.size() && k < 5; ++k) {
            real.reflectors.push_back(extra.reflectors[k]);
            real.mark_class.push_back(extra.mark_class[k]);
            const auto after = shortest_nlos_path(real, link);
            if (before.length) {
                REQUIRE(after.length);
                CHECK(*after.length <= *before.length);
            }
        }
    }
}

TEST_CASE("returned paths satisfy the specular law and exceed d") {
    const LinkGeometry link(300.0);
    const BooleanModelConfig cfg{1e-5, truncation_window(1800.0, 300.0, 120.0), fig5_marks()};
    for (int i = 0; i < 500; ++i) {
        Rng rng = substream(42, i);
        const auto real = sample_realization(cfg, rng);
        const auto r = shortest_nlos_path(real, link);
        if (!r.length)
            continue;
        CHECK(*r.length > 300.0);
        const auto& refl = real.reflectors[*r.reflector_index];
        const auto rp = shortest_reflector_path(link, refl);
        REQUIRE(rp);
        const auto n = reflector_edges(refl)[index_of(rp->edge)].segment.right_normal();
        const auto a = nlos::testing::bounce_angles(link, *r.reflecting_point, n);
        CHECK(std::abs(a.incidence - a.reflection) < 1e-9);
    }
}

TEST_CASE("reflectors outside the truncation window never beat s_max") {
    const LinkGeometry link(300.0);
    const double s_max = 1800.0;
    const Rect window = truncation_window(s_max, 300.0, 120.0);
    const Rect big{-3000, 3000, -3000, 3000};
    const BooleanModelConfig outer{2e-5, big, fig5_marks()};
    const BooleanModelConfig inner{1e-5, window, fig5_marks()};
    int outside = 0;
    for (int i = 0; i < 300; ++i) {
        Rng rng = substream(43, i);
        const auto real = sample_realization(outer, rng);
        for (const auto& refl : real.reflectors) {
            if (window.contains(refl.center()))
                continue;
            ++outside;
            const auto rp = shortest_reflector_path(link, refl);
            if (rp)
                CHECK(rp->path.length > s_max);
        }
        // coupled: a censored standard-window realization stays above s_max
        // once the outer reflectors are added
        Rng rng2 = substream(44, i);
        Realization std_real = sample_realization(inner, rng2);
        if (!shortest_nlos_path(std_real, link).censored())
            continue;
        for (const auto& refl : real.reflectors)
            if (!window.contains(refl.center())) {
                std_real.reflectors.push_back(refl);
                std_real.mark_class.push_back(0);
            }
        const auto enlarged = shortest_nlos_path(std_real, link);
        if (enlarged.length)
            CHECK(*enlarged.length > s_max);
    }
    CHECK(outside > 10000);
}

TEST_CASE("empirical CDF semantics") {
    const EmpiricalCdf cdf({400.0, 350.0, 500.0}, 1);
    CHECK(cdf.total() == 4);
    CHECK(cdf.samples().front() == 350.0);
    CHECK(cdf.evaluate(300.0) == 0.0);
    CHECK(cdf.evaluate(349.999) == 0.0);
    CHECK(cdf.evaluate(350.0) == 0.25);  // right-continuous
    CHECK(cdf.evaluate(450.0) == 0.5);
    CHECK(cdf.evaluate(1e9) == 0.75);    // censored mass never arrives
}

TEST_CASE("KS distance is exact at the jumps") {
    const EmpiricalCdf e({1.0, 2.0}, 0);
    const auto uniform = [](double s) { return std::clamp(s / 4.0, 0.0, 1.0); };
    CHECK(ks_distance(e, uniform, 0.0, 4.0) == doctest::Approx(0.5));
    CHECK(ks_distance(e, uniform, 0.0, 1.5) == doctest::Approx(0.25));

    // brute-force sup on a fine grid never exceeds the exact value
    Rng rng = substream(45, 0);
    std::vector<double> xs;
    for (int i = 0; i < 200; ++i)
        xs.push_back(4.0 * uniform01(rng));
    const EmpiricalCdf f(xs, 20);
    const double exact = ks_distance(f, uniform, 0.5, 3.5);
    double grid = 0.0;
    for (int i = 0; i <= 300000; ++i) {
        const double s = 0.5 + 3.0 * i / 300000.0;
        grid = std::max(grid, std::abs(f.evaluate(s) - uniform(s)));
    }
    CHECK(grid <= exact + 1e-12);
    CHECK(grid == doctest::Approx(exact).epsilon(1e-3));
}

TEST_CASE("simulation is partition invariant and seeded") {
    const LinkGeometry link(300.0);
    const BooleanModelConfig cfg{1e-5, truncation_window(1800.0, 300.0, 120.0), fig5_marks()};
    const auto serial = simulate_paths(cfg, link, 1000, 99, 1);
    const auto split = simulate_paths(cfg, link, 1000, 99, 3);
    const auto other = simulate_paths(cfg, link, 1000, 100, 1);
    REQUIRE(serial.size() == split.size());
    int differs = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].length == split[i].length);
        differs += serial[i].length != other[i].length;
    }
    CHECK(differs > 500);
}

TEST_CASE("dense field always yields a path longer than d") {
    const BooleanModelConfig cfg{1e-3, truncation_window(1800.0, 300.0, 120.0), fig5_marks()};
    const auto e = empirical_cdf(cfg, LinkGeometry(300.0), 1, 5);
    REQUIRE(e.samples().size() == 1);
    CHECK(e.samples()[0] > 300.0);
    CHECK(e.evaluate(300.0) == 0.0);
}

TEST_CASE("doubling the intensity dominates the empirical CDF") {
    const LinkGeometry link(300.0);
    const Rect w = truncation_window(1800.0, 300.0, 120.0);
    const auto e1 = empirical_cdf({1e-5, w, fig5_marks()}, link, 20000, 7);
    const auto e2 = empirical_cdf({2e-5, w, fig5_marks()}, link, 20000, 8);
    for (double b = 25.0; b <= 1500.0; b += 5.0)
        CHECK(e2.evaluate(300.0 + b) > e1.evaluate(300.0 + b));
}

TEST_CASE("small Monte Carlo run tracks the closed form") {
    const LinkGeometry link(300.0);
    const BooleanModelConfig cfg{1e-5, truncation_window(1800.0, 300.0, 120.0), fig5_marks()};
    const NlosModelParams params(1e-5, fig5_marks(), 300.0);
    const auto e = empirical_cdf(cfg, link, 20000, 2024);
    const double ks = ks_distance(e, [&](double s) { return path_length_cdf(params, s); }, 300.0, 1800.0);
    CHECK(ks < 1.63 / std::sqrt(20000.0));
}
