#pragma once

// Value types shared by every stage of the pipeline: uniform grids, 1D spectra,
// joint spectral amplitudes and interferograms.  Frequencies are angular
// (rad/s) and delays are seconds throughout; THz/fs/nm only appear in io.hpp.

#include "errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace bwkt
{

inline constexpr double kSpeedOfLight = 299'792'458.0;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

using complex = std::complex<double>;

inline double thz_to_angular(double thz) { return kTwoPi * thz * 1e12; }
inline double angular_to_thz(double omega) { return omega / kTwoPi * 1e-12; }

// ---------------------------------------------------------------------------
// Grids

namespace detail
{

inline void check_grid(double step, std::size_t count, const char* what)
{
    if (!(step > 0.0) || !std::isfinite(step))
        fail(ErrorCode::InvalidArgument, std::string(what) + " step must be positive");
    if (count < 2)
        fail(ErrorCode::InvalidArgument, std::string(what) + " needs at least two points");
}

} // namespace detail

/// Uniform grid of angular frequencies: start + k*step for k in [0, count).
class FrequencyGrid
{
public:
    FrequencyGrid(double start, double step, std::size_t count)
        : start_(start), step_(step), count_(count)
    {
        detail::check_grid(step, count, "frequency grid");
        if (!std::isfinite(start))
            fail(ErrorCode::InvalidArgument, "frequency grid start must be finite");
    }

    /// Grid of `count` points whose middle lies on `center`.
    static FrequencyGrid centered(double center, double step, std::size_t count)
    {
        return {center - 0.5 * static_cast<double>(count - 1) * step, step, count};
    }

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return count_; }
    double at(std::size_t k) const noexcept { return start_ + static_cast<double>(k) * step_; }
    double back() const noexcept { return at(count_ - 1); }

    /// Nearest grid index (may fall outside [0, size)).
    std::ptrdiff_t nearest_index(double omega) const noexcept
    {
        return static_cast<std::ptrdiff_t>(std::llround((omega - start_) / step_));
    }

    bool operator==(const FrequencyGrid&) const = default;

private:
    double start_;
    double step_;
    std::size_t count_;
};

/// Uniform grid of delays (seconds).
class DelayGrid
{
public:
    DelayGrid(double start, double step, std::size_t count)
        : start_(start), step_(step), count_(count)
    {
        detail::check_grid(step, count, "delay grid");
        if (!std::isfinite(start))
            fail(ErrorCode::InvalidArgument, "delay grid start must be finite");
    }

    /// start = -(count-1)/2 * step; odd counts put a sample exactly on zero.
    static DelayGrid symmetric(double step, std::size_t count)
    {
        return {-0.5 * static_cast<double>(count - 1) * step, step, count};
    }

    double start() const noexcept { return start_; }
    double step() const noexcept { return step_; }
    std::size_t size() const noexcept { return count_; }
    double at(std::size_t k) const noexcept { return start_ + static_cast<double>(k) * step_; }
    double back() const noexcept { return at(count_ - 1); }

    bool is_symmetric(double rel_tol = 1e-6) const noexcept
    {
        return std::abs(start_ + 0.5 * static_cast<double>(count_ - 1) * step_) <= rel_tol * step_;
    }

    bool operator==(const DelayGrid&) const = default;

private:
    double start_;
    double step_;
    std::size_t count_;
};

// ---------------------------------------------------------------------------
// Quadrature

/// Trapezoidal weight of sample k on an n-point uniform grid (unit step).
inline double trapezoid_weight(std::size_t k, std::size_t n) noexcept
{
    return (k == 0 || k + 1 == n) ? 0.5 : 1.0;
}

inline double trapezoid(std::span<const double> values, double step) noexcept
{
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k)
        sum += trapezoid_weight(k, values.size()) * values[k];
    return sum * step;
}

// ---------------------------------------------------------------------------
// Spectra

enum class SpectralAxis
{
    omega,
    omega_plus,
    omega_minus,
};

/// Nonnegative spectral density over a frequency grid.  Values are densities
/// per unit angular frequency, so a normalized spectrum has unit trapezoidal
/// integral.  `center` is the nominal carrier; it is informational only.
class Spectrum1D
{
public:
    Spectrum1D(FrequencyGrid grid, std::vector<double> values, double center,
               SpectralAxis axis = SpectralAxis::omega)
        : grid_(grid), values_(std::move(values)), center_(center), axis_(axis)
    {
        if (values_.size() != grid_.size())
            fail(ErrorCode::InvalidArgument, "spectrum size does not match its grid");
        for (double v : values_) {
            if (!(v >= 0.0) || !std::isfinite(v))
                fail(ErrorCode::InvalidArgument, "spectrum values must be finite and nonnegative");
        }
    }

    const FrequencyGrid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double center() const noexcept { return center_; }
    SpectralAxis axis() const noexcept { return axis_; }

    double integral() const noexcept { return trapezoid(values_, grid_.step()); }

    bool is_normalized(double rel_tol = 1e-9) const noexcept
    {
        return std::abs(integral() - 1.0) <= rel_tol;
    }

    /// Grid point carrying the largest value (first one on ties).
    double peak_frequency() const noexcept
    {
        auto it = std::max_element(values_.begin(), values_.end());
        return grid_.at(static_cast<std::size_t>(it - values_.begin()));
    }

private:
    FrequencyGrid grid_;
    std::vector<double> values_;
    double center_;
    SpectralAxis axis_;
};

/// Rescale to unit trapezoidal integral.  The shape is untouched.
inline Spectrum1D normalize_spectrum(const Spectrum1D& s)
{
    const double area = s.integral();
    if (!(area > 0.0))
        fail(ErrorCode::ZeroSpectrum, "spectrum integral is zero");
    std::vector<double> scaled(s.values().begin(), s.values().end());
    for (double& v : scaled)
        v /= area;
    return {s.grid(), std::move(scaled), s.center(), s.axis()};
}

// ---------------------------------------------------------------------------
// Joint spectral amplitude

/// Complex biphoton amplitude f(ws, wi), stored row-major with the signal
/// index outermost: amplitude(is, ii) = data[is * grid_i.size() + ii].
class JointSpectralAmplitude
{
public:
    JointSpectralAmplitude(FrequencyGrid grid_s, FrequencyGrid grid_i, std::vector<complex> amplitude)
        : grid_s_(grid_s), grid_i_(grid_i), amplitude_(std::move(amplitude))
    {
        if (amplitude_.size() != grid_s_.size() * grid_i_.size())
            fail(ErrorCode::InvalidArgument, "amplitude size does not match grids");
        for (const complex& a : amplitude_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                fail(ErrorCode::InvalidArgument, "amplitude must be finite");
        }
    }

    const FrequencyGrid& grid_s() const noexcept { return grid_s_; }
    const FrequencyGrid& grid_i() const noexcept { return grid_i_; }
    std::size_t rows() const noexcept { return grid_s_.size(); }
    std::size_t cols() const noexcept { return grid_i_.size(); }
    bool is_square() const noexcept { return grid_s_ == grid_i_; }

    const complex& operator()(std::size_t is, std::size_t ii) const noexcept
    {
        return amplitude_[is * cols() + ii];
    }
    std::span<const complex> data() const noexcept { return amplitude_; }

    /// 2D trapezoidal integral of |f|^2.
    double norm_squared() const noexcept
    {
        double sum = 0.0;
        for (std::size_t s = 0; s < rows(); ++s) {
            const double ws = trapezoid_weight(s, rows());
            double row = 0.0;
            for (std::size_t i = 0; i < cols(); ++i)
                row += trapezoid_weight(i, cols()) * std::norm((*this)(s, i));
            sum += ws * row;
        }
        return sum * grid_s_.step() * grid_i_.step();
    }

    bool is_normalized(double rel_tol = 1e-9) const noexcept
    {
        return std::abs(norm_squared() - 1.0) <= rel_tol;
    }

private:
    FrequencyGrid grid_s_;
    FrequencyGrid grid_i_;
    std::vector<complex> amplitude_;
};

inline JointSpectralAmplitude normalize_jsa(const JointSpectralAmplitude& f)
{
    const double n2 = f.norm_squared();
    if (!(n2 > 0.0))
        fail(ErrorCode::ZeroSpectrum, "joint spectral amplitude has zero norm");
    const double scale = 1.0 / std::sqrt(n2);
    std::vector<complex> scaled(f.data().begin(), f.data().end());
    for (complex& a : scaled)
        a *= scale;
    return {f.grid_s(), f.grid_i(), std::move(scaled)};
}

/// Exchange of signal and idler: the transpose of the amplitude array.
inline JointSpectralAmplitude swap_photons(const JointSpectralAmplitude& f)
{
    std::vector<complex> t(f.data().size());
    for (std::size_t s = 0; s < f.rows(); ++s)
        for (std::size_t i = 0; i < f.cols(); ++i)
            t[i * f.rows() + s] = f(s, i);
    return {f.grid_i(), f.grid_s(), std::move(t)};
}

/// ||f(ws,wi) - f(wi,ws)|| / ||f|| with the grid's trapezoidal weights.
inline double exchange_symmetry_residual(const JointSpectralAmplitude& f)
{
    if (!f.is_square())
        fail(ErrorCode::GridMismatch, "exchange symmetry needs identical signal and idler grids");
    const std::size_t n = f.rows();
    double diff = 0.0;
    double total = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const double w = trapezoid_weight(s, n) * trapezoid_weight(i, n);
            diff += w * std::norm(f(s, i) - f(i, s));
            total += w * std::norm(f(s, i));
        }
    }
    if (!(total > 0.0))
        fail(ErrorCode::ZeroSpectrum, "joint spectral amplitude has zero norm");
    return std::sqrt(diff / total);
}

/// Largest |Im f| relative to the largest |f|.
inline double imaginary_fraction(const JointSpectralAmplitude& f) noexcept
{
    double max_im = 0.0;
    double max_abs = 0.0;
    for (const complex& a : f.data()) {
        max_im = std::max(max_im, std::abs(a.imag()));
        max_abs = std::max(max_abs, std::abs(a));
    }
    return max_abs > 0.0 ? max_im / max_abs : 0.0;
}

// ---------------------------------------------------------------------------
// Interferograms

enum class InterferenceKind
{
    unknown,
    mzi,
    homi,
    nooni,
};

enum class Units
{
    probability,
    counts,
};

/// Detection probability (or raw counts) sampled on a delay grid.
class Interferogram
{
public:
    static constexpr double kProbabilitySlack = 1e-9;

    Interferogram(DelayGrid delays, std::vector<double> values, InterferenceKind kind,
                  Units units = Units::probability)
        : delays_(delays), values_(std::move(values)), kind_(kind), units_(units)
    {
        if (values_.size() != delays_.size())
            fail(ErrorCode::InvalidArgument, "interferogram size does not match its delay grid");
        for (double v : values_) {
            if (!std::isfinite(v))
                fail(ErrorCode::InvalidArgument, "interferogram values must be finite");
            if (units_ == Units::probability && (v < -kProbabilitySlack || v > 1.0 + kProbabilitySlack))
                fail(ErrorCode::InvalidArgument, "probability outside [0, 1]");
            if (units_ == Units::counts && (v < 0.0 || v != std::floor(v)))
                fail(ErrorCode::InvalidArgument, "counts must be nonnegative integers");
        }
    }

    const DelayGrid& delays() const noexcept { return delays_; }
    std::span<const double> values() const noexcept { return values_; }
    InterferenceKind kind() const noexcept { return kind_; }
    Units units() const noexcept { return units_; }

private:
    DelayGrid delays_;
    std::vector<double> values_;
    InterferenceKind kind_;
    Units units_;
};

// ---------------------------------------------------------------------------
// Unit conversion

/// Ordinary-frequency width (Hz) of a wavelength band dl centred on l0.
inline double wavelength_bandwidth_to_frequency(double delta_lambda, double lambda0)
{
    if (!(lambda0 > 0.0) || !std::isfinite(lambda0))
        fail(ErrorCode::InvalidWavelength, "center wavelength must be positive");
    if (!(delta_lambda >= 0.0) || !std::isfinite(delta_lambda))
        fail(ErrorCode::InvalidWavelength, "wavelength bandwidth must be nonnegative");
    return kSpeedOfLight * delta_lambda / (lambda0 * lambda0);
}

} // namespace bwkt
