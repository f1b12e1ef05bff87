#pragma once

// Source models: Gaussian one-photon spectra, the SPDC joint spectral
// amplitude of a pulsed pump in a group-velocity-matched crystal, and
// separable sum/difference-frequency test amplitudes.

#include "core.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace bwkt
{

/// FWHM of a Gaussian in units of its standard deviation, 2 sqrt(2 ln 2).
inline constexpr double kGaussianFwhmPerSigma = 2.3548200450309493;
/// Time-bandwidth product of a transform-limited Gaussian pulse, 4 ln2 / pi.
inline constexpr double kGaussianTimeBandwidth = 4.0 * std::numbers::ln2 / std::numbers::pi;
/// Half-maximum abscissa of sinc^2(x) = (sin x / x)^2.
inline constexpr double kSincSquaredHalfMax = 1.3915573782515103;

/// Edge decay threshold on |f|^2 relative to its peak.
inline constexpr double kEdgeDecay = 1e-6;
/// A sinc factor is treated as decayed beyond this many zeros.
inline constexpr double kSincDecayedZeros = 20.0;

/// sin(x)/x, with the removable singularity handled by its Taylor series.
inline double sinc(double x) noexcept
{
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

struct PumpSpec
{
    double center_wavelength;       // m
    double intensity_fwhm_duration; // s

    void validate() const
    {
        if (!(center_wavelength > 0.0) || !(intensity_fwhm_duration > 0.0))
            fail(ErrorCode::InvalidArgument, "pump wavelength and duration must be positive");
    }

    /// Pump carrier, rad/s.
    double center_frequency() const { return kTwoPi * kSpeedOfLight / center_wavelength; }

    /// Spectral intensity FWHM (ordinary frequency, Hz) of the transform-limited Gaussian.
    double spectral_fwhm() const { return kGaussianTimeBandwidth / intensity_fwhm_duration; }
};

/// Linearized phase matching: group delays per unit length relative to the pump.
struct PhaseMatchSpec
{
    double crystal_length;     // m
    double group_delay_signal; // s/m
    double group_delay_idler;  // s/m

    static PhaseMatchSpec gvm_symmetric(double length, double mismatch)
    {
        return {length, 0.5 * mismatch, -0.5 * mismatch};
    }

    void validate() const
    {
        if (!(crystal_length > 0.0))
            fail(ErrorCode::InvalidArgument, "crystal length must be positive");
        if (!std::isfinite(group_delay_signal) || !std::isfinite(group_delay_idler))
            fail(ErrorCode::InvalidArgument, "group delays must be finite");
    }
};

enum class ProfileShape
{
    gaussian,
    sinc2,
};

/// Intensity profile along one of the w+ / w- axes, with its FWHM in rad/s.
struct AxisProfile
{
    ProfileShape shape;
    double fwhm;
};

namespace detail
{

// Amplitude factor and its "decayed" test, as a function of the offset from the
// profile centre.  Intensities are normalized to 1 at zero offset.
struct Factor
{
    ProfileShape shape;
    double scale; // gaussian: 1/(2 sigma^2) on intensity; sinc2: argument per rad/s

    static Factor from(const AxisProfile& p)
    {
        if (!(p.fwhm > 0.0) || !std::isfinite(p.fwhm))
            fail(ErrorCode::InvalidArgument, "profile FWHM must be positive");
        if (p.shape == ProfileShape::gaussian) {
            const double sigma = p.fwhm / kGaussianFwhmPerSigma;
            return {p.shape, 1.0 / (2.0 * sigma * sigma)};
        }
        return {p.shape, 2.0 * kSincSquaredHalfMax / p.fwhm};
    }

    double amplitude(double offset) const noexcept
    {
        if (shape == ProfileShape::gaussian)
            return std::exp(-0.5 * scale * offset * offset);
        return sinc(scale * offset);
    }

    // Upper bound on the intensity at this offset, and whether the sinc tail is
    // far enough out to count as decayed regardless of the bound.
    double envelope(double offset) const noexcept
    {
        if (shape == ProfileShape::gaussian)
            return std::exp(-scale * offset * offset);
        const double x = scale * std::abs(offset);
        return x <= 1.0 ? 1.0 : 1.0 / (x * x);
    }

    bool past_decay_zeros(double offset) const noexcept
    {
        return shape == ProfileShape::sinc2 && scale * std::abs(offset) >= kSincDecayedZeros * kPi;
    }
};

// Every boundary cell must either have |f|^2 below kEdgeDecay of the peak or
// sit past the 20th zero of a sinc factor.
template<typename OffsetsAt>
void check_boundary_decay(const FrequencyGrid& grid, const Factor& a, const Factor& b, OffsetsAt offsets_at,
                          const char* model)
{
    const std::size_t n = grid.size();
    auto check = [&](std::size_t s, std::size_t i) {
        const auto [oa, ob] = offsets_at(grid.at(s), grid.at(i));
        if (a.past_decay_zeros(oa) || b.past_decay_zeros(ob))
            return;
        if (a.envelope(oa) * b.envelope(ob) > kEdgeDecay)
            fail(ErrorCode::GridTooNarrow,
                 std::string(model) + ": amplitude has not decayed at the grid boundary");
    };
    for (std::size_t k = 0; k < n; ++k) {
        check(0, k);
        check(n - 1, k);
        check(k, 0);
        check(k, n - 1);
    }
}

} // namespace detail

/// Normalized Gaussian intensity spectrum.  A FWHM narrower than one grid step
/// collapses to the single-bin delta convention (mass 1/step in one bin).
inline Spectrum1D gaussian_spectrum(double center, double intensity_fwhm, const FrequencyGrid& grid)
{
    if (!(intensity_fwhm > 0.0) || !std::isfinite(intensity_fwhm))
        fail(ErrorCode::InvalidArgument, "spectral FWHM must be positive");
    std::vector<double> values(grid.size(), 0.0);
    if (intensity_fwhm < grid.step()) {
        const auto k = grid.nearest_index(center);
        if (k <= 0 || k + 1 >= static_cast<std::ptrdiff_t>(grid.size()))
            fail(ErrorCode::GridTooNarrow, "delta spectrum must sit on an interior grid point");
        values[static_cast<std::size_t>(k)] = 1.0 / grid.step();
        return {grid, std::move(values), center};
    }
    const double sigma = intensity_fwhm / kGaussianFwhmPerSigma;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double x = (grid.at(k) - center) / sigma;
        values[k] = std::exp(-0.5 * x * x);
    }
    if (values.front() > kEdgeDecay || values.back() > kEdgeDecay)
        fail(ErrorCode::GridTooNarrow, "Gaussian spectrum has not decayed at the grid edges");
    return normalize_spectrum(Spectrum1D(grid, std::move(values), center));
}

/// Real amplitude whose intensity factorizes as plus(w+ - center_sum) * minus(w-),
/// with w+ = ws + wi and w- = ws - wi, on a square grid.
inline JointSpectralAmplitude separable_jsa(const AxisProfile& plus, const AxisProfile& minus, double center_sum,
                                            const FrequencyGrid& grid)
{
    const auto fp = detail::Factor::from(plus);
    const auto fm = detail::Factor::from(minus);
    detail::check_boundary_decay(
        grid, fp, fm, [&](double ws, double wi) { return std::pair{ws + wi - center_sum, ws - wi}; },
        "separable amplitude");

    const std::size_t n = grid.size();
    std::vector<complex> amp(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        const double ws = grid.at(s);
        for (std::size_t i = 0; i < n; ++i) {
            const double wi = grid.at(i);
            amp[s * n + i] = fp.amplitude(ws + wi - center_sum) * fm.amplitude(ws - wi);
        }
    }
    return normalize_jsa(JointSpectralAmplitude(grid, grid, std::move(amp)));
}

/// |f|^2 proportional to exp(-(w+ - c)^2 / 2 s+^2) exp(-w-^2 / 2 s-^2).
inline JointSpectralAmplitude double_gaussian_jsa(double sigma_plus, double sigma_minus, double center_sum,
                                                  const FrequencyGrid& grid)
{
    if (!(sigma_plus > 0.0) || !(sigma_minus > 0.0))
        fail(ErrorCode::InvalidArgument, "Gaussian widths must be positive");
    return separable_jsa({ProfileShape::gaussian, kGaussianFwhmPerSigma * sigma_plus},
                         {ProfileShape::gaussian, kGaussianFwhmPerSigma * sigma_minus}, center_sum, grid);
}

/// SPDC amplitude alpha(ws + wi) * sinc(dk L / 2) on a square grid, where alpha is
/// the transform-limited Gaussian pump amplitude and dk is linearized in the
/// group delays around the degenerate frequency w0 = wp / 2.
inline JointSpectralAmplitude build_jsa(const PumpSpec& pump, const PhaseMatchSpec& pm, const FrequencyGrid& grid)
{
    pump.validate();
    pm.validate();
    const double wp = pump.center_frequency();
    const double w0 = 0.5 * wp;
    if (w0 < grid.start() || w0 > grid.back())
        fail(ErrorCode::GridTooNarrow, "grid does not cover the degenerate frequency");

    const auto pump_factor = detail::Factor::from({ProfileShape::gaussian, kTwoPi * pump.spectral_fwhm()});
    const double half_l = 0.5 * pm.crystal_length;
    auto phase_arg = [&](double ws, double wi) {
        return half_l * (pm.group_delay_signal * (ws - w0) + pm.group_delay_idler * (wi - w0));
    };

    // Express the sinc argument as a unit-scale sinc2 factor so the boundary
    // test can reuse the separable machinery.
    const detail::Factor pm_factor{ProfileShape::sinc2, 1.0};
    detail::check_boundary_decay(
        grid, pump_factor, pm_factor, [&](double ws, double wi) { return std::pair{ws + wi - wp, phase_arg(ws, wi)}; },
        "SPDC amplitude");

    const std::size_t n = grid.size();
    std::vector<complex> amp(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        const double ws = grid.at(s);
        for (std::size_t i = 0; i < n; ++i) {
            const double wi = grid.at(i);
            amp[s * n + i] = pump_factor.amplitude(ws + wi - wp) * sinc(phase_arg(ws, wi));
        }
    }
    return normalize_jsa(JointSpectralAmplitude(grid, grid, std::move(amp)));
}

} // namespace bwkt
