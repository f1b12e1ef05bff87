#pragma once

// Inverse direction: recover one-photon and sum/difference-frequency spectra
// from time-domain interferograms, plus the envelope and width measurements
// used to compare the two domains.

#include "core.hpp"
#include "fft.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <vector>

namespace bwkt
{

/// Signed fringe signal s(tau) = Re G(tau) on a delay grid.
struct FringeSignal
{
    DelayGrid delays;
    std::vector<double> values;
    InterferenceKind kind;
};

namespace detail
{

inline std::size_t edge_span(std::size_t n, std::size_t fraction)
{
    return std::max<std::size_t>(1, n / fraction);
}

/// Mean over the outer tenth of the window on both sides; the asymptote of
/// every pattern kind is its coherence-free baseline.
inline double edge_baseline(std::span<const double> v)
{
    const std::size_t m = edge_span(v.size(), 10);
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k)
        sum += v[k] + v[v.size() - 1 - k];
    return sum / static_cast<double>(2 * m);
}

} // namespace detail

/// Probabilities of a pattern.  Counts are scaled so their baseline sits at 1/2.
inline std::vector<double> as_probability(const Interferogram& ig)
{
    std::vector<double> p(ig.values().begin(), ig.values().end());
    if (ig.units() == Units::counts) {
        const double baseline = detail::edge_baseline(ig.values());
        if (!(baseline > 0.0))
            fail(ErrorCode::InvalidArgument, "counts have zero baseline");
        for (double& v : p)
            v /= 2.0 * baseline;
    }
    return p;
}

/// s = 2P - 1 for MZI and NOON, 1 - 2P for HOM, so that s = Re G in all cases.
inline FringeSignal detrend(const Interferogram& ig)
{
    double sign = 0.0;
    switch (ig.kind()) {
    case InterferenceKind::mzi:
    case InterferenceKind::nooni: sign = +1.0; break;
    case InterferenceKind::homi: sign = -1.0; break;
    case InterferenceKind::unknown: fail(ErrorCode::UnknownKind, "interferogram kind is not set");
    }
    auto s = as_probability(ig);
    for (double& v : s)
        v = sign * (2.0 * v - 1.0);
    return {ig.delays(), std::move(s), ig.kind()};
}

inline SpectralAxis axis_for(InterferenceKind kind)
{
    switch (kind) {
    case InterferenceKind::homi: return SpectralAxis::omega_minus;
    case InterferenceKind::nooni: return SpectralAxis::omega_plus;
    case InterferenceKind::mzi: return SpectralAxis::omega;
    case InterferenceKind::unknown: break;
    }
    fail(ErrorCode::UnknownKind, "interferogram kind is not set");
}

struct ExtractOptions
{
    /// Zero padding: the transform length is the next power of two above
    /// padding_factor * samples.
    std::size_t padding_factor = 16;
    bool hann_window = false;
    /// Largest |s| allowed in the outer 1/32 of the window, relative to peak |s|.
    double edge_tolerance = 1e-3;
    /// Expected carrier on the kind's axis (rad/s); the delay step must resolve it.
    std::optional<double> expected_carrier;
    /// Largest spectral value allowed in the top 1/32 of the band, relative to the peak.
    double band_edge_tolerance = 1e-2;
};

struct ExtractedSpectrum
{
    Spectrum1D spectrum;
    /// Set when a negative value deeper than 1% of the peak had to be clipped.
    bool negative_warning = false;
};

/// F(w) = 1/(2 pi) int s(tau) exp(i w tau) dtau, discretized as dt * sum and
/// evaluated on a zero-padded FFT grid.  Carrier kinds (MZI, NOON) return the
/// positive-frequency half, where s = Re G contributes F/2; HOM returns the
/// two-sided difference-frequency spectrum.
inline ExtractedSpectrum extract_spectrum(const Interferogram& ig, const ExtractOptions& opt = {})
{
    const FringeSignal sig = detrend(ig);
    const auto& delays = sig.delays;
    const std::size_t n = delays.size();
    const double dt = delays.step();
    if (!delays.is_symmetric())
        fail(ErrorCode::NonUniformGrid, "delay grid must be symmetric about zero");

    double peak_abs = 0.0;
    for (double v : sig.values)
        peak_abs = std::max(peak_abs, std::abs(v));
    if (!(peak_abs > 0.0))
        fail(ErrorCode::WindowTooShort, "interferogram carries no fringe signal");
    const std::size_t edge = detail::edge_span(n, 32);
    for (std::size_t k = 0; k < edge; ++k) {
        if (std::abs(sig.values[k]) > opt.edge_tolerance * peak_abs
            || std::abs(sig.values[n - 1 - k]) > opt.edge_tolerance * peak_abs)
            fail(ErrorCode::WindowTooShort, "fringe signal has not decayed at the window edges");
    }
    if (opt.expected_carrier && *opt.expected_carrier >= kPi / dt)
        fail(ErrorCode::NyquistViolation, "delay step cannot resolve the expected carrier");

    const std::size_t m = next_power_of_two(std::max<std::size_t>(1, opt.padding_factor) * n);
    std::vector<complex> buffer(m, complex(0.0));
    const double half_window = 0.5 * static_cast<double>(n - 1) * dt;
    for (std::size_t k = 0; k < n; ++k) {
        double w = 1.0;
        if (opt.hann_window) {
            const double c = std::cos(0.5 * kPi * delays.at(k) / half_window);
            w = c * c;
        }
        buffer[k] = sig.values[k] * w;
    }
    const auto y = fft(buffer, FftSign::positive);

    // X(w_k) = exp(i w_k tau_0) Y_k re-references the transform to tau = 0.
    const double dw = kTwoPi / (static_cast<double>(m) * dt);
    auto transform_at = [&](std::ptrdiff_t k) {
        const auto idx = static_cast<std::size_t>((k % static_cast<std::ptrdiff_t>(m) + static_cast<std::ptrdiff_t>(m))
                                                  % static_cast<std::ptrdiff_t>(m));
        const double omega = static_cast<double>(k) * dw;
        return (y[idx] * std::polar(1.0, omega * delays.start())).real() * dt / kTwoPi;
    };

    const auto half = static_cast<std::ptrdiff_t>(m / 2);
    std::vector<double> values;
    double start = 0.0;
    if (sig.kind == InterferenceKind::homi) {
        values.reserve(m);
        for (std::ptrdiff_t k = -half; k < half; ++k)
            values.push_back(transform_at(k));
        start = -static_cast<double>(half) * dw;
    } else {
        values.reserve(m / 2 + 1);
        for (std::ptrdiff_t k = 0; k <= half; ++k)
            values.push_back((k == 0 ? 1.0 : 2.0) * transform_at(k));
    }

    const double peak = *std::max_element(values.begin(), values.end());
    if (!(peak > 0.0))
        fail(ErrorCode::WindowTooShort, "extracted spectrum has no positive peak");
    bool warning = false;
    for (double& v : values) {
        if (v < 0.0) {
            if (v < -0.01 * peak)
                warning = true;
            v = 0.0;
        }
    }

    // Spectral weight piled against the band edge means the carrier aliased.
    const std::size_t band_edge = detail::edge_span(values.size(), 32);
    for (std::size_t k = 0; k < band_edge; ++k) {
        const bool near_nyquist = values[values.size() - 1 - k] > opt.band_edge_tolerance * peak
            || (sig.kind == InterferenceKind::homi && values[k] > opt.band_edge_tolerance * peak);
        if (near_nyquist)
            fail(ErrorCode::NyquistViolation, "spectrum reaches the Nyquist frequency; delay step too coarse");
    }

    FrequencyGrid grid(start, dw, values.size());
    const auto peak_index =
        static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
    return {Spectrum1D(grid, std::move(values), grid.at(peak_index), axis_for(sig.kind)), warning};
}

// ---------------------------------------------------------------------------
// Envelope and width

/// Analytic signal s + i H[s] by the one-sided spectrum construction, zero
/// padded to twice the length.  Refuses carriers with fewer than 4 samples per period.
inline std::vector<complex> analytic_signal(std::span<const double> values)
{
    const std::size_t n = values.size();
    if (n < 8)
        fail(ErrorCode::TooFewSamples, "envelope needs at least 8 samples");
    const std::size_t m = next_power_of_two(2 * n);
    std::vector<complex> buffer(m, complex(0.0));
    for (std::size_t k = 0; k < n; ++k)
        buffer[k] = values[k];
    auto spectrum = fft(buffer, FftSign::negative);

    std::size_t dominant = 0;
    for (std::size_t k = 1; k <= m / 2; ++k) {
        if (std::abs(spectrum[k]) > std::abs(spectrum[dominant]))
            dominant = k;
    }
    // cycles per sample of the dominant component
    if (static_cast<double>(dominant) / static_cast<double>(m) > 0.25)
        fail(ErrorCode::TooFewSamples, "carrier has fewer than 4 samples per period");

    for (std::size_t k = 1; k < m / 2; ++k)
        spectrum[k] *= 2.0;
    for (std::size_t k = m / 2 + 1; k < m; ++k)
        spectrum[k] = 0.0;
    auto analytic = fft(spectrum, FftSign::positive);
    analytic.resize(n);
    for (complex& a : analytic)
        a /= static_cast<double>(m);
    return analytic;
}

/// Magnitude of the analytic signal.  HOM patterns carry no carrier and their
/// envelope is |s| itself.
inline std::vector<double> envelope(const FringeSignal& sig)
{
    const std::size_t n = sig.values.size();
    if (n < 8)
        fail(ErrorCode::TooFewSamples, "envelope needs at least 8 samples");
    std::vector<double> e(n);
    if (sig.kind == InterferenceKind::homi) {
        std::transform(sig.values.begin(), sig.values.end(), e.begin(), [](double v) { return std::abs(v); });
        return e;
    }
    if (std::all_of(sig.values.begin(), sig.values.end(), [](double v) { return v == 0.0; }))
        return e;
    const auto analytic = analytic_signal(sig.values);
    std::transform(analytic.begin(), analytic.end(), e.begin(), [](const complex& a) { return std::abs(a); });
    return e;
}

/// Full width at half of the global maximum, with linear interpolation between
/// the samples bracketing each half-maximum crossing nearest to the peak.
inline double fwhm(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        fail(ErrorCode::InvalidArgument, "fwhm: abscissa and ordinate differ in length");
    if (y.size() < 3)
        fail(ErrorCode::NoCrossing, "fwhm: too few samples for a crossing on both sides");
    const auto peak = static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
    const double top = y[peak];
    if (!(top > 0.0))
        fail(ErrorCode::NoCrossing, "fwhm: curve has no positive maximum");
    const double half = 0.5 * top;

    auto crossing = [&](std::size_t inside, std::size_t outside) {
        const double t = (y[inside] - half) / (y[inside] - y[outside]);
        return x[inside] + t * (x[outside] - x[inside]);
    };

    std::optional<double> right;
    for (std::size_t j = peak + 1; j < y.size(); ++j) {
        if (y[j] <= half) {
            right = crossing(j - 1, j);
            break;
        }
    }
    std::optional<double> left;
    for (std::size_t j = peak; j-- > 0;) {
        if (y[j] <= half) {
            left = crossing(j + 1, j);
            break;
        }
    }
    if (!left || !right)
        fail(ErrorCode::NoCrossing, "fwhm: curve does not fall to half maximum on both sides");
    return *right - *left;
}

/// FWHM of a spectrum in rad/s.
inline double fwhm(const Spectrum1D& s)
{
    std::vector<double> x(s.grid().size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = s.grid().at(k);
    return fwhm(x, s.values());
}

/// Delays of a grid as a vector (seconds).
inline std::vector<double> delay_axis(const DelayGrid& g)
{
    std::vector<double> x(g.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = g.at(k);
    return x;
}

/// FWHM (seconds) of the fringe envelope of a pattern.
inline double envelope_fwhm(const Interferogram& ig)
{
    const auto sig = detrend(ig);
    const auto e = envelope(sig);
    return fwhm(delay_axis(sig.delays), e);
}

// ---------------------------------------------------------------------------
// Shape comparison

/// Relative L2 distance between two spectra after normalizing both to unit
/// area and shifting `measured` so the centroids coincide.  Evaluated on the
/// reference grid with linear interpolation of `measured`.
inline double spectral_shape_error(const Spectrum1D& measured, const Spectrum1D& reference)
{
    auto centroid = [](const Spectrum1D& s) {
        std::vector<double> moment(s.grid().size());
        for (std::size_t k = 0; k < moment.size(); ++k)
            moment[k] = s.grid().at(k) * s.values()[k];
        return trapezoid(moment, s.grid().step()) / s.integral();
    };
    const double area_m = measured.integral();
    const double area_r = reference.integral();
    if (!(area_m > 0.0) || !(area_r > 0.0))
        fail(ErrorCode::ZeroSpectrum, "shape comparison of an empty spectrum");
    const double shift = centroid(measured) - centroid(reference);

    const auto& gm = measured.grid();
    auto measured_at = [&](double omega) {
        const double pos = (omega - gm.start()) / gm.step();
        if (pos < 0.0 || pos > static_cast<double>(gm.size() - 1))
            return 0.0;
        const auto k = std::min(static_cast<std::size_t>(pos), gm.size() - 2);
        const double t = pos - static_cast<double>(k);
        return (1.0 - t) * measured.values()[k] + t * measured.values()[k + 1];
    };

    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t k = 0; k < reference.grid().size(); ++k) {
        const double omega = reference.grid().at(k);
        const double r = reference.values()[k] / area_r;
        const double mv = measured_at(omega + shift) / area_m;
        diff += (mv - r) * (mv - r);
        ref += r * r;
    }
    return std::sqrt(diff / ref);
}

} // namespace bwkt
