#include "nlos/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace nlos {

NlosPathResult shortest_nlos_path(const Realization& realization, const LinkGeometry& link) {
    NlosPathResult best;
    for (std::size_t i = 0; i < realization.reflectors.size(); ++i) {
        const auto rp = shortest_reflector_path(link, realization.reflectors[i]);
        if (!rp || (best.length && rp->path.length >= *best.length))
            continue;
        best.length = rp->path.length;
        best.reflecting_point = rp->path.point;
        best.reflector_index = i;
    }
    return best;
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples, std::size_t censored)
    : samples_(std::move(samples)), censored_(censored) {
    std::sort(samples_.begin(), samples_.end());
}

double EmpiricalCdf::evaluate(double s) const {
    if (total() == 0)
        return 0.0;
    const auto below = std::upper_bound(samples_.begin(), samples_.end(), s) - samples_.begin();
    return static_cast<double>(below) / static_cast<double>(total());
}

std::vector<NlosPathResult> simulate_paths(const BooleanModelConfig& cfg, const LinkGeometry& link,
                                           std::size_t realizations, std::uint64_t seed, unsigned workers) {
    cfg.validate();
    if (realizations == 0)
        throw std::invalid_argument("need at least one realization");
    std::vector<NlosPathResult> results(realizations);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            Rng rng = substream(seed, i);
            results[i] = shortest_nlos_path(sample_realization(cfg, rng), link);
        }
    };

    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(realizations)));
    if (workers == 1) {
        run_range(0, realizations);
        return results;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::size_t chunk = (realizations + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(realizations, begin + chunk);
            if (begin < end)
                pool.emplace_back(run_range, begin, end);
        }
    }
    return results;
}

EmpiricalCdf make_empirical_cdf(const std::vector<NlosPathResult>& results) {
    std::vector<double> samples;
    samples.reserve(results.size());
    std::size_t censored = 0;
    for (const auto& r : results) {
        if (r.length)
            samples.push_back(*r.length);
        else
            ++censored;
    }
    return EmpiricalCdf(std::move(samples), censored);
}

EmpiricalCdf empirical_cdf(const BooleanModelConfig& cfg, const LinkGeometry& link, std::size_t realizations,
                           std::uint64_t seed, unsigned workers) {
    return make_empirical_cdf(simulate_paths(cfg, link, realizations, seed, workers));
}

double ks_distance(const EmpiricalCdf& empirical, const std::function<double(double)>& cdf, double lo, double hi) {
    if (!(hi >= lo))
        throw std::invalid_argument("KS interval needs hi >= lo");
    const auto& xs = empirical.samples();
    const double n = static_cast<double>(empirical.total());
    double worst = std::max(std::abs(empirical.evaluate(lo) - cdf(lo)), std::abs(empirical.evaluate(hi) - cdf(hi)));
    auto it = std::upper_bound(xs.begin(), xs.end(), lo);
    while (it != xs.end() && *it <= hi) {
        const double x = *it;
        const auto first = it - xs.begin();
        it = std::upper_bound(it, xs.end(), x);
        const auto last = it - xs.begin();
        const double f = cdf(x);
        worst = std::max({worst, std::abs(static_cast<double>(first) / n - f), std::abs(static_cast<double>(last) / n - f)});
    }
    return worst;
}

}  // namespace nlos
