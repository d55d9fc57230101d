#pragma once

#include <cstdint>
#include <random>

namespace nlos {

using Rng = std::mt19937_64;

/// Independent generator for work unit @p index under @p master_seed. The
/// result depends only on the pair, so any partition of indices across
/// workers reproduces the same draws.
[[nodiscard]] inline Rng substream(std::uint64_t master_seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6e6c6f73u};
    return Rng(seq);
}

/// Uniform draw on [0, 1). Portable across standard libraries, unlike
/// std::uniform_real_distribution.
[[nodiscard]] inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace nlos
