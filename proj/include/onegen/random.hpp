#pragma once

#include <cstdint>
#include <random>

namespace onegen {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; unlike the standard
/// distributions this is identical across standard libraries.
inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return x % bound;
}

} // namespace onegen
