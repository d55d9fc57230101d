#include "nlos/boolean_model.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace nlos;
using nlos::testing::kPi;

namespace {

std::vector<double> degrees(std::initializer_list<double> values) {
    std::vector<double> out;
    for (double v : values)
        out.push_back(v * kPi / 180.0);
    return out;
}

MarkDistribution fig5_marks() {
    return MarkDistribution::uniform({20, 40, 60, 80, 100, 120}, degrees({10, 20, 30, 40, 50, 60, 70, 80}));
}

}  // namespace

TEST_CASE("mark distribution moments") {
    const auto marks = fig5_marks();
    CHECK(marks.num_classes() == 48);
    CHECK(marks.probability(2, 5) == doctest::Approx(1.0 / 48.0));
    CHECK(marks.mean_width() == doctest::Approx(70.0).epsilon(1e-14));
    CHECK(marks.mean_squared_width() == doctest::Approx(36400.0 / 6.0).epsilon(1e-14));
    CHECK(marks.max_width() == 120.0);

    const MarkDistribution skewed({10.0, 30.0}, {0.5}, {0.25, 0.75});
    CHECK(skewed.mean_width() == doctest::Approx(25.0));
}

TEST_CASE("mark distribution rejects invalid supports") {
    CHECK_THROWS_AS(MarkDistribution({}, {0.5}, {}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({-1.0}, {0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({1.0}, {0.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({1.0}, {kPi / 2}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({1.0, 2.0}, {0.5}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({1.0, 2.0}, {0.5}, {0.6, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(MarkDistribution({1.0, 2.0}, {0.5}, {1.5, -0.5}), std::invalid_argument);
}

TEST_CASE("config validation") {
    const BooleanModelConfig bad_lambda{0.0, {0, 1, 0, 1}, fig5_marks()};
    CHECK_THROWS_AS(bad_lambda.validate(), std::invalid_argument);
    const BooleanModelConfig empty_window{1e-5, {0, 0, 0, 1}, fig5_marks()};
    CHECK_THROWS_AS(empty_window.validate(), std::invalid_argument);
}

TEST_CASE("an 8 km square window has 640 expected reflectors") {
    const BooleanModelConfig cfg{1e-5, {-4000, 4000, -4000, 4000}, fig5_marks()};
    CHECK(cfg.intensity * cfg.window.area() == doctest::Approx(640.0));
}

TEST_CASE("reflector counts have Poisson moments") {
    const BooleanModelConfig cfg{1e-5, {-1000, 1000, -500, 500}, fig5_marks()};
    const double mean = cfg.intensity * cfg.window.area();  // 20
    const int draws = 10000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
        Rng rng = substream(31, i);
        const auto n = static_cast<double>(sample_realization(cfg, rng).reflectors.size());
        sum += n;
        sum2 += n * n;
    }
    const double m = sum / draws;
    const double var = sum2 / draws - m * m;
    CHECK(std::abs(m - mean) < 3.0 * std::sqrt(mean / draws));
    CHECK(var / m == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("centers are uniform on the window and marks come from the support") {
    const BooleanModelConfig cfg{1e-4, {100, 300, -50, 50}, fig5_marks()};
    Rng rng = substream(32, 0);
    const auto real = sample_realization(cfg, rng);
    REQUIRE(real.reflectors.size() == real.mark_class.size());
    for (std::size_t i = 0; i < real.reflectors.size(); ++i) {
        const auto& r = real.reflectors[i];
        CHECK(cfg.window.contains(r.center()));
        CHECK(r.width() == cfg.marks.width_of_class(real.mark_class[i]));
        CHECK(r.orientation() == doctest::Approx(cfg.marks.orientation_of_class(real.mark_class[i])).epsilon(1e-15));
    }

    // x-coordinates in five equal bins, pooled across realizations
    std::vector<double> bins(5, 0.0);
    double total = 0.0;
    for (int i = 0; i < 2000; ++i) {
        Rng r = substream(33, i);
        for (const auto& refl : sample_realization(cfg, r).reflectors) {
            bins[static_cast<std::size_t>((refl.center().x - 100.0) / 40.0)] += 1.0;
            total += 1.0;
        }
    }
    double chi2 = 0.0;
    for (double b : bins)
        chi2 += (b - total / 5) * (b - total / 5) / (total / 5);
    CHECK(chi2 < 13.277);  // chi-square 99% quantile with 4 dof
}

TEST_CASE("uniform 6x8 marks pass a chi-square test") {
    const BooleanModelConfig cfg{1e-5, {-2000, 2000, -2000, 2000}, fig5_marks()};
    std::vector<double> counts(48, 0.0);
    double total = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Rng rng = substream(34, i);
        for (auto k : sample_realization(cfg, rng).mark_class) {
            counts[k] += 1.0;
            total += 1.0;
        }
    }
    double chi2 = 0.0;
    for (double c : counts)
        chi2 += (c - total / 48) * (c - total / 48) / (total / 48);
    CHECK(chi2 < 72.443);  // chi-square 99% quantile with 47 dof
}

TEST_CASE("each mark class is an independently thinned Poisson process") {
    const MarkDistribution marks({20.0, 80.0}, degrees({15, 60}), {0.1, 0.2, 0.3, 0.4});
    const BooleanModelConfig cfg{2e-5, {-500, 500, -500, 500}, marks};
    const int draws = 10000;
    std::vector<double> sum(4, 0.0), sum2(4, 0.0);
    double cross = 0.0;
    for (int i = 0; i < draws; ++i) {
        Rng rng = substream(35, i);
        std::vector<double> c(4, 0.0);
        for (auto k : sample_realization(cfg, rng).mark_class)
            c[k] += 1.0;
        for (int k = 0; k < 4; ++k) {
            sum[k] += c[k];
            sum2[k] += c[k] * c[k];
        }
        cross += c[0] * c[3];
    }
    for (int k = 0; k < 4; ++k) {
        CAPTURE(k);
        const double expected = cfg.intensity * marks.pmf()[k] * cfg.window.area();
        const double m = sum[k] / draws;
        CHECK(std::abs(m - expected) < 4.0 * std::sqrt(expected / draws));
        CHECK((sum2[k] / draws - m * m) / m == doctest::Approx(1.0).epsilon(0.06));
    }
    // independence: covariance of two classes near zero
    const double cov = cross / draws - (sum[0] / draws) * (sum[3] / draws);
    CHECK(std::abs(cov) < 4.0 * std::sqrt(sum[0] / draws * sum[3] / draws / draws));
}

TEST_CASE("sampling is deterministic and translation-equivariant") {
    const BooleanModelConfig a{1e-4, {0, 400, 0, 300}, fig5_marks()};
    const BooleanModelConfig b{1e-4, {1000, 1400, -700, -400}, fig5_marks()};
    Rng r1 = substream(36, 5);
    Rng r2 = substream(36, 5);
    Rng r3 = substream(36, 5);
    const auto x = sample_realization(a, r1);
    const auto y = sample_realization(a, r2);
    const auto z = sample_realization(b, r3);
    REQUIRE(x.reflectors.size() == y.reflectors.size());
    REQUIRE(x.reflectors.size() == z.reflectors.size());
    for (std::size_t i = 0; i < x.reflectors.size(); ++i) {
        CHECK(x.reflectors[i].center() == y.reflectors[i].center());
        CHECK(x.mark_class[i] == y.mark_class[i]);
        CHECK(z.reflectors[i].center().x == doctest::Approx(x.reflectors[i].center().x + 1000.0));
        CHECK(z.reflectors[i].center().y == doctest::Approx(x.reflectors[i].center().y - 700.0));
        CHECK(z.mark_class[i] == x.mark_class[i]);
    }
}

TEST_CASE("coverage fraction") {
    const BooleanModelConfig cfg{1e-5, {0, 1, 0, 1}, fig5_marks()};
    CHECK(coverage_fraction(cfg) == doctest::Approx(0.0588631002036325).epsilon(1e-12));

    const BooleanModelConfig tiny{1e-15, {0, 1, 0, 1}, fig5_marks()};
    CHECK(coverage_fraction(tiny) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(coverage_fraction(tiny) >= 0.0);

    const BooleanModelConfig single{3e-5, {0, 1, 0, 1}, MarkDistribution({50.0}, {0.4}, {1.0})};
    CHECK(coverage_fraction(single) == doctest::Approx(1.0 - std::exp(-3e-5 * 2500.0)));
}

TEST_CASE("truncation window encloses the inflated ellipse") {
    const Rect w = truncation_window(1800.0, 300.0, 120.0);
    const double r = 120.0 * std::sqrt(2.0) / 2.0;
    CHECK(w.x_max == doctest::Approx(900.0 + r));
    CHECK(w.x_min == doctest::Approx(-900.0 - r));
    CHECK(w.y_max == doctest::Approx(std::sqrt(1800.0 * 1800.0 - 90000.0) / 2.0 + r));
}
