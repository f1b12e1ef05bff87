#include "support.hpp"

#include <cmath>

using namespace bwkt;
using bwkt::test::random_complex_jsa;

TEST(FrequencyGrid, RejectsDegenerateGrids)
{
    EXPECT_ERROR_CODE(FrequencyGrid(0.0, 0.0, 10), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(FrequencyGrid(0.0, -1.0, 10), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(FrequencyGrid(0.0, 1.0, 1), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(DelayGrid(0.0, 1.0, 1), ErrorCode::InvalidArgument);
}

TEST(FrequencyGrid, IndexRoundTripIsIdentity)
{
    const FrequencyGrid g(thz_to_angular(150.0), thz_to_angular(0.013), 4097);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_EQ(g.nearest_index(g.at(k)), static_cast<std::ptrdiff_t>(k));
        EXPECT_EQ(g.at(k), g.start() + static_cast<double>(k) * g.step());
    }
}

TEST(DelayGrid, SymmetricConstruction)
{
    const auto odd = DelayGrid::symmetric(0.5e-15, 11);
    EXPECT_DOUBLE_EQ(odd.start(), -2.5e-15);
    EXPECT_DOUBLE_EQ(odd.at(5), 0.0);
    EXPECT_TRUE(odd.is_symmetric());
    const auto even = DelayGrid::symmetric(1e-15, 10);
    EXPECT_DOUBLE_EQ(even.start(), -4.5e-15);
    EXPECT_TRUE(even.is_symmetric());
    EXPECT_FALSE(DelayGrid(-4e-15, 1e-15, 10).is_symmetric());
}

TEST(NormalizeSpectrum, UniformSpectrum)
{
    const double step = thz_to_angular(0.5);
    const Spectrum1D s(FrequencyGrid(0.0, step, 4), {1, 1, 1, 1}, 0.0);
    const auto n = normalize_spectrum(s);
    EXPECT_NEAR(n.integral(), 1.0, 1e-12);
    // trapezoid over four points is 3 * step
    for (double v : n.values())
        EXPECT_NEAR(v * 3.0 * step, 1.0, 1e-12);
}

TEST(NormalizeSpectrum, SingleBinDelta)
{
    const double step = thz_to_angular(0.1);
    const Spectrum1D s(FrequencyGrid(0.0, step, 5), {0, 0, 7, 0, 0}, 2 * step);
    const auto n = normalize_spectrum(s);
    EXPECT_NEAR(n.values()[2] * step, 1.0, 1e-12);
    EXPECT_EQ(n.values()[1], 0.0);
    EXPECT_TRUE(n.is_normalized());
}

TEST(NormalizeSpectrum, GaussianKeepsItsWidth)
{
    const auto grid = FrequencyGrid::centered(0.0, thz_to_angular(0.01), 2001);
    const double sigma = thz_to_angular(1.0);
    std::vector<double> v(grid.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = 3.7 * std::exp(-0.5 * std::pow(grid.at(k) / sigma, 2));
    const Spectrum1D raw(grid, v, 0.0);
    const auto n = normalize_spectrum(raw);
    EXPECT_NEAR(n.integral(), 1.0, 1e-9);
    EXPECT_NEAR(angular_to_thz(fwhm(n)), 2.3548, 2.3548 * 1e-3);
    EXPECT_DOUBLE_EQ(fwhm(n), fwhm(raw));
}

TEST(NormalizeSpectrum, ZeroAndNegativeSpectra)
{
    const FrequencyGrid g(0.0, 1.0, 3);
    EXPECT_ERROR_CODE(normalize_spectrum(Spectrum1D(g, {0, 0, 0}, 0.0)), ErrorCode::ZeroSpectrum);
    EXPECT_ERROR_CODE(Spectrum1D(g, {0, -1, 0}, 0.0), ErrorCode::InvalidArgument);
}

TEST(NormalizeSpectrum, Idempotent)
{
    const FrequencyGrid g(1.0, 0.25, 6);
    const auto once = normalize_spectrum(Spectrum1D(g, {0.1, 2, 3, 0.5, 0.2, 9}, 1.0));
    const auto twice = normalize_spectrum(once);
    for (std::size_t k = 0; k < g.size(); ++k)
        EXPECT_NEAR(twice.values()[k], once.values()[k], 1e-12 * once.values()[k]);
}

TEST(NormalizeJsa, SeparableGaussian)
{
    const auto g = FrequencyGrid::centered(0.0, 0.1, 41);
    std::vector<complex> a(41 * 41);
    for (std::size_t s = 0; s < 41; ++s)
        for (std::size_t i = 0; i < 41; ++i)
            a[s * 41 + i] = 5.0 * std::exp(-g.at(s) * g.at(s) - g.at(i) * g.at(i));
    const auto f = normalize_jsa(JointSpectralAmplitude(g, g, a));
    EXPECT_NEAR(f.norm_squared(), 1.0, 1e-12);
    EXPECT_TRUE(f.is_normalized());
}

TEST(NormalizeJsa, SingleCell)
{
    const FrequencyGrid g(0.0, 0.5, 4);
    std::vector<complex> a(16, 0.0);
    a[1 * 4 + 2] = complex(3.0, -4.0);
    const auto f = normalize_jsa(JointSpectralAmplitude(g, g, a));
    EXPECT_NEAR(f.norm_squared(), 1.0, 1e-12);
    for (std::size_t k = 0; k < 16; ++k) {
        if (k != 6) {
            EXPECT_EQ(f.data()[k], complex(0.0));
        }
    }
}

TEST(NormalizeJsa, IdempotentOnRandomComplexAmplitude)
{
    const auto once = random_complex_jsa(32, 11);
    const auto twice = normalize_jsa(once);
    for (std::size_t k = 0; k < once.data().size(); ++k)
        EXPECT_LE(std::abs(twice.data()[k] - once.data()[k]), 1e-12 * std::abs(once.data()[k]) + 1e-300);
}

TEST(NormalizeJsa, ZeroNorm)
{
    const FrequencyGrid g(0.0, 1.0, 2);
    EXPECT_ERROR_CODE(normalize_jsa(JointSpectralAmplitude(g, g, std::vector<complex>(4))), ErrorCode::ZeroSpectrum);
}

TEST(ExchangeSymmetry, ProductAmplitudeIsSymmetric)
{
    const auto g = FrequencyGrid::centered(0.0, 0.2, 17);
    std::vector<complex> a(17 * 17);
    for (std::size_t s = 0; s < 17; ++s)
        for (std::size_t i = 0; i < 17; ++i)
            a[s * 17 + i] = std::exp(-std::pow(g.at(s) - 0.3, 2)) * std::exp(-std::pow(g.at(i) - 0.3, 2));
    EXPECT_EQ(exchange_symmetry_residual(JointSpectralAmplitude(g, g, a)), 0.0);
}

TEST(ExchangeSymmetry, SingleOffDiagonalCellGivesSqrtTwo)
{
    // ||f - f^T||^2 holds the cell twice (at (a,b) and (b,a)); ||f||^2 holds it once.
    const FrequencyGrid g(0.0, 1.0, 5);
    std::vector<complex> a(25, 0.0);
    a[1 * 5 + 3] = 0.7;
    EXPECT_NEAR(exchange_symmetry_residual(JointSpectralAmplitude(g, g, a)), std::sqrt(2.0), 1e-15);
}

TEST(ExchangeSymmetry, InvariantUnderSwap)
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto f = random_complex_jsa(12, seed);
        EXPECT_DOUBLE_EQ(exchange_symmetry_residual(f), exchange_symmetry_residual(swap_photons(f)));
    }
}

TEST(ExchangeSymmetry, GridMismatch)
{
    const FrequencyGrid gs(0.0, 1.0, 3);
    const FrequencyGrid gi(0.0, 1.0, 4);
    EXPECT_ERROR_CODE(exchange_symmetry_residual(JointSpectralAmplitude(gs, gi, std::vector<complex>(12, 1.0))),
                      ErrorCode::GridMismatch);
}

TEST(WavelengthBandwidth, BandwidthsAt1584nm)
{
    // 18.2 nm (2.18 THz) and 1.9 nm (0.23 THz) around 1584 nm
    EXPECT_NEAR(wavelength_bandwidth_to_frequency(18.2e-9, 1584e-9), 2.18e12, 0.01 * 2.18e12);
    EXPECT_NEAR(wavelength_bandwidth_to_frequency(1.9e-9, 1584e-9), 0.227e12, 0.001e12);
    EXPECT_EQ(wavelength_bandwidth_to_frequency(0.0, 1584e-9), 0.0);
}

TEST(WavelengthBandwidth, LinearInBandwidth)
{
    const double base = wavelength_bandwidth_to_frequency(1e-9, 1550e-9);
    for (double a : {0.0, 0.5, 2.0, 17.0})
        EXPECT_NEAR(wavelength_bandwidth_to_frequency(a * 1e-9, 1550e-9), a * base, 1e-15 * a * base);
}

TEST(WavelengthBandwidth, InvalidInputs)
{
    EXPECT_ERROR_CODE(wavelength_bandwidth_to_frequency(1e-9, 0.0), ErrorCode::InvalidWavelength);
    EXPECT_ERROR_CODE(wavelength_bandwidth_to_frequency(1e-9, -1.0), ErrorCode::InvalidWavelength);
    EXPECT_ERROR_CODE(wavelength_bandwidth_to_frequency(-1e-9, 1584e-9), ErrorCode::InvalidWavelength);
}

TEST(Interferogram, ValidatesUnits)
{
    const auto d = DelayGrid::symmetric(1.0, 3);
    EXPECT_ERROR_CODE(Interferogram(d, {0.1, 1.2, 0.3}, InterferenceKind::mzi), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(Interferogram(d, {1, 2.5, 3}, InterferenceKind::mzi, Units::counts), ErrorCode::InvalidArgument);
    EXPECT_ERROR_CODE(Interferogram(d, {1, 2}, InterferenceKind::mzi), ErrorCode::InvalidArgument);
    EXPECT_NO_THROW(Interferogram(d, {0, 17, 3}, InterferenceKind::homi, Units::counts));
}
