#pragma once

// Conversion of simulated probabilities to detector counts.

#include "core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace bwkt
{

enum class NoiseModel
{
    none,
    poisson,
};

/// Scales a probability pattern so its largest sample expects `peak_counts`
/// counts, then rounds (none) or draws Poisson variates (poisson) from a
/// generator seeded with `seed`.
inline Interferogram to_counts(const Interferogram& ig, double peak_counts, NoiseModel noise, std::uint64_t seed = 0)
{
    if (ig.units() != Units::probability)
        fail(ErrorCode::InvalidArgument, "pattern is already in counts");
    if (!(peak_counts > 0.0) || !std::isfinite(peak_counts))
        fail(ErrorCode::InvalidArgument, "peak counts must be positive");
    const auto values = ig.values();
    const double top = *std::max_element(values.begin(), values.end());
    if (!(top > 0.0))
        fail(ErrorCode::InvalidArgument, "pattern is identically zero");

    std::mt19937_64 rng(seed);
    std::vector<double> counts(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double expected = std::max(0.0, values[k]) * peak_counts / top;
        if (noise == NoiseModel::poisson && expected > 0.0)
            counts[k] = static_cast<double>(std::poisson_distribution<std::int64_t>(expected)(rng));
        else
            counts[k] = std::round(expected);
    }
    return {ig.delays(), std::move(counts), ig.kind(), Units::counts};
}

} // namespace bwkt
