#pragma once

// Forward simulation of one-photon (MZI) and two-photon (HOM, NOON)
// interferograms.  The two-photon patterns come in two flavours: a fast path
// that reduces the double integral to a 1D cosine transform of the sum or
// difference-frequency marginal (valid for exchange-symmetric real
// amplitudes), and direct 2D quadratures of the general detection
// probabilities that serve as its oracle.

#include "core.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace bwkt
{

enum class Sign
{
    plus,  // NOON: sum frequency w+ = ws + wi
    minus, // HOM: difference frequency w- = ws - wi
};

enum class CorrelationOrder
{
    g1,
    g2_plus,
    g2_minus,
};

/// Complex correlation function sampled on a delay grid.
struct CorrelationTrace
{
    DelayGrid delays;
    std::vector<complex> values;
    CorrelationOrder order;
};

/// Acceptance thresholds for the symmetric fast path.
struct SymmetryTolerance
{
    double symmetry = 1e-6; // exchange_symmetry_residual
    double realness = 1e-9; // max |Im f| / max |f|
};

inline constexpr double kNormalizationTolerance = 1e-6;

namespace detail
{

inline void require_normalized(double integral, const char* what)
{
    if (std::abs(integral - 1.0) > kNormalizationTolerance)
        fail(ErrorCode::NotNormalized, std::string(what) + " is not normalized (integral "
                                           + std::to_string(integral) + ")");
}

/// Refuses delay steps that alias the highest frequency on the relevant axis.
inline void require_nyquist(const DelayGrid& delays, double omega_max)
{
    if (omega_max > 0.0 && delays.step() > kPi / omega_max)
        fail(ErrorCode::NyquistViolation, "delay step " + std::to_string(delays.step())
                                              + " s undersamples frequencies up to "
                                              + std::to_string(omega_max) + " rad/s");
}

inline double max_abs_frequency(const FrequencyGrid& g)
{
    return std::max(std::abs(g.start()), std::abs(g.back()));
}

/// sum_k weight_k * values_k * exp(-i w_k tau) * step for every delay.
inline std::vector<complex> fourier_sum(const Spectrum1D& s, const DelayGrid& delays, bool trapezoidal)
{
    const auto values = s.values();
    const auto& grid = s.grid();
    const std::size_t n = values.size();
    std::vector<complex> out(delays.size());
    parallel_for(delays.size(), [&](std::size_t d) {
        const double tau = delays.at(d);
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            if (values[k] == 0.0)
                continue;
            const double w = trapezoidal ? trapezoid_weight(k, n) : 1.0;
            const double phase = grid.at(k) * tau;
            re += w * values[k] * std::cos(phase);
            im -= w * values[k] * std::sin(phase);
        }
        out[d] = complex(re, im) * grid.step();
    });
    return out;
}

inline double clamp_probability(double p)
{
    return std::clamp(p, 0.0, 1.0);
}

inline Interferogram pattern_from_correlation(const DelayGrid& delays, const std::vector<complex>& g, double sign,
                                              InterferenceKind kind)
{
    std::vector<double> p(g.size());
    for (std::size_t k = 0; k < g.size(); ++k)
        p[k] = clamp_probability(0.5 * (1.0 + sign * g[k].real()));
    return {delays, std::move(p), kind};
}

inline void check_fast_path(const JointSpectralAmplitude& jsa, const SymmetryTolerance& tol)
{
    if (!jsa.is_square())
        fail(ErrorCode::GridMismatch, "two-photon patterns need identical signal and idler grids");
    require_normalized(jsa.norm_squared(), "joint spectral amplitude");
    const double residual = exchange_symmetry_residual(jsa);
    if (residual > tol.symmetry)
        fail(ErrorCode::AsymmetricJsa, "exchange symmetry residual " + std::to_string(residual)
                                           + " exceeds " + std::to_string(tol.symmetry));
    const double im = imaginary_fraction(jsa);
    if (im > tol.realness)
        fail(ErrorCode::ComplexJsa, "imaginary fraction " + std::to_string(im) + " exceeds "
                                        + std::to_string(tol.realness));
}

} // namespace detail

// ---------------------------------------------------------------------------
// One-photon interference

/// G1(tau) = int F1(w) exp(-i w tau) dw, trapezoidal.
inline CorrelationTrace g1(const Spectrum1D& spectrum, const DelayGrid& delays)
{
    detail::require_normalized(spectrum.integral(), "spectrum");
    detail::require_nyquist(delays, detail::max_abs_frequency(spectrum.grid()));
    return {delays, detail::fourier_sum(spectrum, delays, true), CorrelationOrder::g1};
}

/// P1(tau) = (1 + Re G1(tau)) / 2.
inline Interferogram mzi_pattern(const Spectrum1D& spectrum, const DelayGrid& delays)
{
    const auto trace = g1(spectrum, delays);
    return detail::pattern_from_correlation(delays, trace.values, +1.0, InterferenceKind::mzi);
}

// ---------------------------------------------------------------------------
// Sum / difference-frequency marginals

/// F2+-(w+-) = 1/2 int |f|^2 dw-+.  Cells are binned by index sum (plus) or
/// difference (minus); along a line of constant w+- neighbouring cells are
/// 2*step apart in w-+, and the Jacobian contributes the factor 1/2, so each
/// bin holds step * sum(weights * |f|^2).  With the grid's trapezoidal weights
/// the bin sum times step equals the 2D norm exactly; no renormalization.
inline Spectrum1D marginal_projection(const JointSpectralAmplitude& jsa, Sign sign)
{
    if (!jsa.is_square())
        fail(ErrorCode::GridMismatch, "marginal projection needs identical signal and idler grids");
    const std::size_t n = jsa.rows();
    const double step = jsa.grid_s().step();
    std::vector<double> bins(2 * n - 1, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        const double ws = trapezoid_weight(s, n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = sign == Sign::plus ? s + i : s + (n - 1) - i;
            bins[k] += ws * trapezoid_weight(i, n) * std::norm(jsa(s, i));
        }
    }
    const double jacobian = 0.5;
    const double line_spacing = 2.0 * step;
    for (double& b : bins)
        b *= jacobian * line_spacing;

    const auto& g = jsa.grid_s();
    const double start = sign == Sign::plus ? 2.0 * g.start() : g.start() - g.back();
    FrequencyGrid axis(start, step, bins.size());
    const auto peak = static_cast<std::size_t>(std::max_element(bins.begin(), bins.end()) - bins.begin());
    return {axis, std::move(bins), axis.at(peak),
            sign == Sign::plus ? SpectralAxis::omega_plus : SpectralAxis::omega_minus};
}

/// One-photon spectrum of the signal photon, int |f|^2 dwi, normalized.
inline Spectrum1D signal_marginal(const JointSpectralAmplitude& jsa)
{
    const std::size_t rows = jsa.rows();
    const std::size_t cols = jsa.cols();
    std::vector<double> values(rows, 0.0);
    for (std::size_t s = 0; s < rows; ++s) {
        double sum = 0.0;
        for (std::size_t i = 0; i < cols; ++i)
            sum += trapezoid_weight(i, cols) * std::norm(jsa(s, i));
        values[s] = sum * jsa.grid_i().step();
    }
    const auto peak = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
    return normalize_spectrum(Spectrum1D(jsa.grid_s(), std::move(values), jsa.grid_s().at(peak)));
}

// ---------------------------------------------------------------------------
// Two-photon interference, symmetric fast path

/// G2+-(tau) = int F2+-(w) exp(-i w tau) dw over the projection bins.
inline CorrelationTrace g2(const JointSpectralAmplitude& jsa, Sign sign, const DelayGrid& delays,
                           const SymmetryTolerance& tol = {})
{
    detail::check_fast_path(jsa, tol);
    const Spectrum1D marginal = marginal_projection(jsa, sign);
    detail::require_nyquist(delays, detail::max_abs_frequency(marginal.grid()));
    return {delays, detail::fourier_sum(marginal, delays, false),
            sign == Sign::plus ? CorrelationOrder::g2_plus : CorrelationOrder::g2_minus};
}

/// P2+-(tau) = (1 +- Re G2+-(tau)) / 2; plus is NOON, minus is HOM.
inline Interferogram biphoton_pattern_symmetric(const JointSpectralAmplitude& jsa, Sign sign,
                                                const DelayGrid& delays, const SymmetryTolerance& tol = {})
{
    const auto trace = g2(jsa, sign, delays, tol);
    return detail::pattern_from_correlation(delays, trace.values, sign == Sign::plus ? +1.0 : -1.0,
                                            sign == Sign::plus ? InterferenceKind::nooni : InterferenceKind::homi);
}

// ---------------------------------------------------------------------------
// Two-photon interference, general quadrature

namespace detail
{

inline void check_general(const JointSpectralAmplitude& jsa)
{
    if (!jsa.is_square())
        fail(ErrorCode::GridMismatch, "two-photon patterns need identical signal and idler grids");
    require_normalized(jsa.norm_squared(), "joint spectral amplitude");
}

template<typename Integrand>
Interferogram quadrature_pattern(const JointSpectralAmplitude& jsa, const DelayGrid& delays, double prefactor,
                                 InterferenceKind kind, Integrand integrand)
{
    const std::size_t n = jsa.rows();
    const auto& grid = jsa.grid_s();
    const double cell = grid.step() * grid.step();
    std::vector<double> p(delays.size());
    parallel_for(delays.size(), [&](std::size_t d) {
        const double tau = delays.at(d);
        std::vector<complex> phase(n);
        for (std::size_t k = 0; k < n; ++k)
            phase[k] = std::polar(1.0, -grid.at(k) * tau);
        double sum = 0.0;
        for (std::size_t a = 0; a < n; ++a) {
            double row = 0.0;
            for (std::size_t b = 0; b < n; ++b)
                row += trapezoid_weight(b, n) * integrand(jsa(a, b), jsa(b, a), phase[a], phase[b]);
            sum += trapezoid_weight(a, n) * row;
        }
        p[d] = clamp_probability(prefactor * sum * cell);
    });
    return {delays, std::move(p), kind};
}

} // namespace detail

/// HOM coincidence probability for an arbitrary (complex, asymmetric) amplitude:
/// P(tau) = 1/4 int |f(w1,w2) - f(w2,w1) exp(-i (w1 - w2) tau)|^2.
inline Interferogram homi_pattern_general(const JointSpectralAmplitude& jsa, const DelayGrid& delays)
{
    detail::check_general(jsa);
    const auto& g = jsa.grid_s();
    detail::require_nyquist(delays, g.back() - g.start());
    return detail::quadrature_pattern(jsa, delays, 0.25, InterferenceKind::homi,
                                      [](complex f12, complex f21, complex e1, complex e2) {
                                          return std::norm(f12 - f21 * e1 * std::conj(e2));
                                      });
}

/// NOON coincidence probability for an arbitrary amplitude:
/// P(tau) = 1/16 int |f(w3,w4)(e3+1)(e4+1) + f(w4,w3)(e3-1)(e4-1)|^2, ek = exp(-i wk tau).
inline Interferogram nooni_pattern_general(const JointSpectralAmplitude& jsa, const DelayGrid& delays)
{
    detail::check_general(jsa);
    const auto& g = jsa.grid_s();
    detail::require_nyquist(delays, 2.0 * detail::max_abs_frequency(g));
    return detail::quadrature_pattern(jsa, delays, 1.0 / 16.0, InterferenceKind::nooni,
                                      [](complex f34, complex f43, complex e3, complex e4) {
                                          return std::norm(f34 * (e3 + 1.0) * (e4 + 1.0)
                                                           + f43 * (e3 - 1.0) * (e4 - 1.0));
                                      });
}

// ---------------------------------------------------------------------------
// Post-processing of simulated patterns

/// Scales the fringe contrast: P -> 1/2 + V (P - 1/2).
inline Interferogram with_visibility(const Interferogram& ig, double visibility)
{
    if (!(visibility >= 0.0 && visibility <= 1.0))
        fail(ErrorCode::InvalidArgument, "visibility must lie in [0, 1]");
    if (ig.units() != Units::probability)
        fail(ErrorCode::InvalidArgument, "visibility scaling needs probability units");
    std::vector<double> p(ig.values().begin(), ig.values().end());
    for (double& v : p)
        v = detail::clamp_probability(0.5 + visibility * (v - 0.5));
    return {ig.delays(), std::move(p), ig.kind(), Units::probability};
}

} // namespace bwkt
