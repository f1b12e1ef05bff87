#pragma once

// Shared fixtures for the unit tests.

#include "bwkt/bwkt.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

namespace bwkt::test
{

/// Random exchange-symmetric real amplitude on an n x n grid, normalized.
inline JointSpectralAmplitude random_symmetric_jsa(std::size_t n, std::uint64_t seed, double center = 0.0,
                                                   double step = 1e12)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<complex> a(n * n);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t i = 0; i <= s; ++i)
            a[s * n + i] = a[i * n + s] = normal(rng);
    const auto grid = FrequencyGrid::centered(center, step, n);
    return normalize_jsa(JointSpectralAmplitude(grid, grid, std::move(a)));
}

inline JointSpectralAmplitude random_complex_jsa(std::size_t n, std::uint64_t seed, double center = 0.0,
                                                 double step = 1e12)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<complex> a(n * n);
    for (auto& v : a)
        v = complex(normal(rng), normal(rng));
    const auto grid = FrequencyGrid::centered(center, step, n);
    return normalize_jsa(JointSpectralAmplitude(grid, grid, std::move(a)));
}

inline std::vector<double> axis_of(const FrequencyGrid& g)
{
    std::vector<double> x(g.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = g.at(k);
    return x;
}

inline std::vector<double> axis_of(const DelayGrid& g)
{
    std::vector<double> x(g.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = g.at(k);
    return x;
}

#define EXPECT_ERROR_CODE(statement, expected)                                                                     \
    do {                                                                                                           \
        try {                                                                                                      \
            statement;                                                                                             \
            ADD_FAILURE() << "expected " << ::bwkt::to_string(expected);                                           \
        } catch (const ::bwkt::Error& e) {                                                                         \
            EXPECT_EQ(e.code(), expected) << e.what();                                                             \
        }                                                                                                          \
    } while (false)

} // namespace bwkt::test
