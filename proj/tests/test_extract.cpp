#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace bwkt;
using bwkt::test::axis_of;

namespace
{

const double kCenter = kTwoPi * kSpeedOfLight / 1584e-9;

// P = (1 + sign E(tau) cos(w tau)) / 2 sampled on the grid.
Interferogram synthetic(const DelayGrid& d, InterferenceKind kind, double carrier, auto envelope_of)
{
    const double sign = kind == InterferenceKind::homi ? -1.0 : 1.0;
    std::vector<double> v(d.size());
    for (std::size_t k = 0; k < d.size(); ++k)
        v[k] = 0.5 * (1.0 + sign * envelope_of(d.at(k)) * std::cos(carrier * d.at(k)));
    return {d, std::move(v), kind};
}

auto gaussian_envelope(double fwhm)
{
    const double sigma = fwhm / kGaussianFwhmPerSigma;
    return [sigma](double t) { return std::exp(-0.5 * t * t / (sigma * sigma)); };
}

auto triangle_envelope(double fwhm)
{
    return [fwhm](double t) { return std::max(0.0, 1.0 - std::abs(t) / fwhm); };
}

} // namespace

TEST(Detrend, SignConventions)
{
    const auto d = DelayGrid::symmetric(1.0, 3);
    EXPECT_EQ(detrend(Interferogram(d, {0.5, 1.0, 0.0}, InterferenceKind::mzi)).values,
              (std::vector<double>{0.0, 1.0, -1.0}));
    EXPECT_EQ(detrend(Interferogram(d, {0.5, 0.0, 1.0}, InterferenceKind::homi)).values,
              (std::vector<double>{0.0, 1.0, -1.0}));
    EXPECT_ERROR_CODE(detrend(Interferogram(d, {0.5, 0.5, 0.5}, InterferenceKind::unknown)), ErrorCode::UnknownKind);
}

TEST(Detrend, CountsUseEdgeBaseline)
{
    const auto d = DelayGrid::symmetric(1.0, 20);
    std::vector<double> c(20, 500.0);
    c[10] = 0.0;
    const auto p = as_probability(Interferogram(d, c, InterferenceKind::homi, Units::counts));
    EXPECT_DOUBLE_EQ(p[0], 0.5);
    EXPECT_DOUBLE_EQ(p[10], 0.0);
    EXPECT_ERROR_CODE(as_probability(Interferogram(d, std::vector<double>(20, 0.0), InterferenceKind::homi, Units::counts)),
                      ErrorCode::InvalidArgument);
}

TEST(Extract, MziRecoversGaussianSpectrum)
{
    const auto grid = FrequencyGrid::centered(kCenter, thz_to_angular(0.02), 1024);
    const auto reference = gaussian_spectrum(kCenter, thz_to_angular(2.18), grid);
    const auto ig = mzi_pattern(reference, DelayGrid::symmetric(0.5e-15, 4001));
    const auto out = extract_spectrum(ig);
    EXPECT_FALSE(out.negative_warning);
    EXPECT_EQ(out.spectrum.axis(), SpectralAxis::omega);
    EXPECT_NEAR(angular_to_thz(fwhm(out.spectrum)), 2.18, 0.01 * 2.18);
    EXPECT_NEAR(out.spectrum.peak_frequency(), kCenter, thz_to_angular(0.05));
    EXPECT_NEAR(out.spectrum.integral(), 1.0, 1e-2);
    EXPECT_LT(spectral_shape_error(out.spectrum, reference), 1e-2);
}

TEST(Extract, HomRecoversDifferenceMarginal)
{
    const PumpSpec pump{defaults::kPumpWavelength, defaults::kPumpDuration};
    const auto grid = FrequencyGrid::centered(0.5 * pump.center_frequency(), kTwoPi * defaults::kFrequencyStep,
                                              defaults::kFrequencyCount);
    const auto jsa = build_jsa(
        pump, PhaseMatchSpec::gvm_symmetric(defaults::kCrystalLength, defaults::kGroupDelayMismatch), grid);
    const auto reference = marginal_projection(jsa, Sign::minus);
    const auto ig = biphoton_pattern_symmetric(jsa, Sign::minus, DelayGrid::symmetric(10e-15, 1601));
    const auto out = extract_spectrum(ig);
    EXPECT_EQ(out.spectrum.axis(), SpectralAxis::omega_minus);
    EXPECT_NEAR(fwhm(out.spectrum), fwhm(reference), 0.01 * fwhm(reference));
    EXPECT_NEAR(angular_to_thz(fwhm(out.spectrum)), 0.22, 0.22 * 0.02);
    EXPECT_NEAR(out.spectrum.peak_frequency(), 0.0, thz_to_angular(0.01));
    EXPECT_LT(spectral_shape_error(out.spectrum, reference), 1e-2);
}

TEST(Extract, NoonRecoversSumMarginal)
{
    const double w0 = 0.5 * PumpSpec{792e-9, 120e-15}.center_frequency();
    const auto grid = FrequencyGrid::centered(w0, thz_to_angular(0.05), 401);
    const auto jsa = double_gaussian_jsa(thz_to_angular(2.0), thz_to_angular(1.0), 2.0 * w0, grid);
    const auto reference = marginal_projection(jsa, Sign::plus);
    const auto ig = biphoton_pattern_symmetric(jsa, Sign::plus, DelayGrid::symmetric(0.5e-15, 2001));
    const auto out = extract_spectrum(ig);
    EXPECT_EQ(out.spectrum.axis(), SpectralAxis::omega_plus);
    EXPECT_NEAR(fwhm(out.spectrum), fwhm(reference), 0.01 * fwhm(reference));
    EXPECT_NEAR(out.spectrum.peak_frequency(), 2.0 * w0, thz_to_angular(0.05));
    EXPECT_LT(spectral_shape_error(out.spectrum, reference), 1e-2);
}

TEST(Extract, TimeBandwidthProducts)
{
    const auto d = DelayGrid::symmetric(2e-15, 4001);
    const double t = 300e-15;
    const auto gauss = extract_spectrum(synthetic(d, InterferenceKind::homi, 0.0, gaussian_envelope(t)));
    EXPECT_NEAR(angular_to_thz(fwhm(gauss.spectrum)) * 1e12 * t, kGaussianTimeBandwidth, 2e-3);
    const auto tri = extract_spectrum(synthetic(d, InterferenceKind::homi, 0.0, triangle_envelope(t)));
    EXPECT_NEAR(angular_to_thz(fwhm(tri.spectrum)) * 1e12 * t, 2.0 * kSincSquaredHalfMax / std::numbers::pi, 2e-3);
}

TEST(Extract, WidthScalesInverselyWithEnvelope)
{
    const auto d = DelayGrid::symmetric(2e-15, 4001);
    std::vector<double> widths;
    for (double t : {100e-15, 200e-15, 400e-15})
        widths.push_back(fwhm(extract_spectrum(synthetic(d, InterferenceKind::mzi, thz_to_angular(50.0),
                                                         gaussian_envelope(t)))
                                  .spectrum));
    EXPECT_NEAR(widths[0] / widths[1], 2.0, 4e-3);
    EXPECT_NEAR(widths[1] / widths[2], 2.0, 4e-3);
}

TEST(Extract, CarrierPositionFollowsFringes)
{
    const auto d = DelayGrid::symmetric(0.5e-15, 2001);
    for (double nu : {150.0, 189.0, 250.0}) {
        const auto out = extract_spectrum(synthetic(d, InterferenceKind::mzi, thz_to_angular(nu), gaussian_envelope(150e-15)));
        EXPECT_NEAR(angular_to_thz(out.spectrum.peak_frequency()), nu, 0.05);
    }
}

TEST(Extract, HannWindowKeepsCenter)
{
    const auto d = DelayGrid::symmetric(0.5e-15, 2001);
    ExtractOptions opt;
    opt.hann_window = true;
    const auto out = extract_spectrum(synthetic(d, InterferenceKind::mzi, kCenter, gaussian_envelope(100e-15)), opt);
    EXPECT_NEAR(out.spectrum.peak_frequency(), kCenter, thz_to_angular(0.05));
}

TEST(Extract, CountsMatchProbabilities)
{
    const auto d = DelayGrid::symmetric(10e-15, 801);
    const auto p = synthetic(d, InterferenceKind::homi, 0.0, gaussian_envelope(1e-12));
    const auto c = to_counts(p, 1e6, NoiseModel::none);
    const double a = fwhm(extract_spectrum(p).spectrum);
    const double b = fwhm(extract_spectrum(c).spectrum);
    EXPECT_NEAR(a, b, 1e-3 * a);
}

TEST(Extract, Errors)
{
    const auto env = gaussian_envelope(100e-15);
    EXPECT_ERROR_CODE(extract_spectrum(synthetic(DelayGrid(-1e-12, 1e-15, 1500), InterferenceKind::homi, 0.0, env)),
                      ErrorCode::NonUniformGrid);
    EXPECT_ERROR_CODE(extract_spectrum(synthetic(DelayGrid::symmetric(1e-15, 101), InterferenceKind::homi, 0.0, env)),
                      ErrorCode::WindowTooShort);
    EXPECT_ERROR_CODE(extract_spectrum(Interferogram(DelayGrid::symmetric(1e-15, 101), std::vector<double>(101, 0.5),
                                                     InterferenceKind::homi)),
                      ErrorCode::WindowTooShort);

    // 2.6 fs samples put a 189 THz carrier inside the top 1/32 of the band.
    const auto coarse = synthetic(DelayGrid::symmetric(2.6e-15, 1001), InterferenceKind::mzi, kCenter,
                                  gaussian_envelope(405e-15));
    EXPECT_ERROR_CODE(extract_spectrum(coarse), ErrorCode::NyquistViolation);
    ExtractOptions opt;
    opt.expected_carrier = kCenter;
    EXPECT_ERROR_CODE(extract_spectrum(synthetic(DelayGrid::symmetric(3e-15, 1001), InterferenceKind::mzi, 0.0,
                                                 gaussian_envelope(405e-15)),
                                       opt),
                      ErrorCode::NyquistViolation);
}

TEST(Extract, NegativeLobesRaiseWarning)
{
    // A box envelope transforms to a sinc with negative lobes.
    const auto d = DelayGrid::symmetric(2e-15, 2001);
    const auto out = extract_spectrum(
        synthetic(d, InterferenceKind::homi, 0.0, [](double t) { return std::abs(t) < 200e-15 ? 1.0 : 0.0; }));
    EXPECT_TRUE(out.negative_warning);
    for (double v : out.spectrum.values())
        EXPECT_GE(v, 0.0);
}

TEST(Envelope, GaussianWavePacket)
{
    const auto d = DelayGrid::symmetric(0.5e-15, 2001);
    const auto ig = synthetic(d, InterferenceKind::mzi, kCenter, gaussian_envelope(200e-15));
    EXPECT_NEAR(envelope_fwhm(ig), 200e-15, 0.005 * 200e-15);
    const auto e = envelope(detrend(ig));
    EXPECT_NEAR(e[1000], 1.0, 1e-3);
}

TEST(Envelope, HomUsesMagnitude)
{
    const auto d = DelayGrid::symmetric(1e-15, 1001);
    const auto ig = synthetic(d, InterferenceKind::homi, 0.0, triangle_envelope(150e-15));
    EXPECT_NEAR(envelope_fwhm(ig), 150e-15, 1e-3 * 150e-15);
}

TEST(Envelope, TooFewSamples)
{
    const auto d = DelayGrid::symmetric(1e-15, 7);
    EXPECT_ERROR_CODE(envelope(detrend(Interferogram(d, std::vector<double>(7, 0.5), InterferenceKind::mzi))),
                      ErrorCode::TooFewSamples);
    std::vector<double> fast(64);
    for (std::size_t k = 0; k < fast.size(); ++k)
        fast[k] = std::cos(0.4 * kTwoPi * static_cast<double>(k));
    EXPECT_ERROR_CODE(analytic_signal(fast), ErrorCode::TooFewSamples);
}

TEST(Fwhm, Oracles)
{
    const std::vector<double> x{0, 1, 2, 3, 4};
    EXPECT_DOUBLE_EQ(fwhm(x, std::vector<double>{0, 0.5, 1, 0.5, 0}), 2.0);
    EXPECT_DOUBLE_EQ(fwhm(x, std::vector<double>{0, 0, 1, 0, 0}), 1.0);
    EXPECT_DOUBLE_EQ(fwhm(x, std::vector<double>{0, 1, 1, 1, 0}), 3.0);
    EXPECT_ERROR_CODE(fwhm(x, std::vector<double>{1, 1, 1, 1, 1}), ErrorCode::NoCrossing);
    EXPECT_ERROR_CODE(fwhm(x, std::vector<double>{0.1, 0.6, 1, 0.7, 0.9}), ErrorCode::NoCrossing);
    EXPECT_ERROR_CODE(fwhm(std::vector<double>{0, 1}, std::vector<double>{0, 1}), ErrorCode::NoCrossing);
    EXPECT_ERROR_CODE(fwhm(x, std::vector<double>{0, 1}), ErrorCode::InvalidArgument);
}

TEST(Fwhm, SampledGaussian)
{
    const auto grid = FrequencyGrid::centered(0.0, 0.01, 2001);
    std::vector<double> y(grid.size());
    for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = std::exp(-0.5 * grid.at(k) * grid.at(k));
    EXPECT_NEAR(fwhm(axis_of(grid), y), kGaussianFwhmPerSigma, 1e-4);
}

TEST(ShapeError, Properties)
{
    const auto grid = FrequencyGrid::centered(0.0, thz_to_angular(0.01), 2001);
    const auto a = gaussian_spectrum(0.0, thz_to_angular(2.0), grid);
    const auto shifted = gaussian_spectrum(thz_to_angular(1.0), thz_to_angular(2.0), grid);
    const auto wider = gaussian_spectrum(0.0, thz_to_angular(2.4), grid);
    EXPECT_NEAR(spectral_shape_error(a, a), 0.0, 1e-12);
    EXPECT_LT(spectral_shape_error(shifted, a), 1e-3);
    EXPECT_GT(spectral_shape_error(wider, a), 0.05);
    const Spectrum1D zero(grid, std::vector<double>(grid.size(), 0.0), 0.0);
    EXPECT_ERROR_CODE(spectral_shape_error(zero, a), ErrorCode::ZeroSpectrum);
}
