#pragma once

// Two-photon spectral intensity on a wavelength grid: ingestion from
// long-form records, projections onto the signal, diagonal and antidiagonal
// axes, and nm -> THz bandwidth reporting.

#include "core.hpp"
#include "extract.hpp"
#include "models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace bwkt
{

/// Uniform, strictly increasing wavelength grid (m).
struct WavelengthGrid
{
    double start;
    double step;
    std::size_t count;

    double at(std::size_t k) const noexcept { return start + static_cast<double>(k) * step; }
    double back() const noexcept { return at(count - 1); }
};

struct TsiRecord
{
    double lambda_s; // m
    double lambda_i; // m
    double counts;
};

/// Counts stored row-major with the signal index outermost.
class TsiGrid
{
public:
    TsiGrid(WavelengthGrid lambda_s, WavelengthGrid lambda_i, std::vector<double> counts)
        : lambda_s_(lambda_s), lambda_i_(lambda_i), counts_(std::move(counts))
    {
        for (const auto& g : {lambda_s_, lambda_i_}) {
            if (g.count < 1 || (g.count > 1 && !(g.step > 0.0)) || !(g.start > 0.0))
                fail(ErrorCode::NonUniform, "wavelength grid must be positive and strictly increasing");
        }
        if (counts_.size() != lambda_s_.count * lambda_i_.count)
            fail(ErrorCode::IncompleteGrid, "counts do not fill the wavelength grid");
        for (double c : counts_) {
            if (!(c >= 0.0) || !std::isfinite(c))
                fail(ErrorCode::NegativeCount, "counts must be finite and nonnegative");
        }
    }

    const WavelengthGrid& lambda_s() const noexcept { return lambda_s_; }
    const WavelengthGrid& lambda_i() const noexcept { return lambda_i_; }
    std::size_t rows() const noexcept { return lambda_s_.count; }
    std::size_t cols() const noexcept { return lambda_i_.count; }
    double operator()(std::size_t s, std::size_t i) const noexcept { return counts_[s * cols() + i]; }
    std::span<const double> counts() const noexcept { return counts_; }

    double total() const noexcept
    {
        double sum = 0.0;
        for (double c : counts_)
            sum += c;
        return sum;
    }

    bool is_square(double rel_tol = 1e-6) const noexcept
    {
        return rows() == cols() && std::abs(lambda_s_.step - lambda_i_.step) <= rel_tol * lambda_s_.step;
    }

private:
    WavelengthGrid lambda_s_;
    WavelengthGrid lambda_i_;
    std::vector<double> counts_;
};

namespace detail
{

inline constexpr double kTsiStepTolerance = 1e-6;

// Sorted distinct values; values closer than 1e-9 relative are merged.
inline std::vector<double> distinct_values(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || std::abs(x - out.back()) > 1e-9 * std::abs(x))
            out.push_back(x);
    }
    return out;
}

inline WavelengthGrid infer_grid(const std::vector<double>& distinct, const char* axis)
{
    if (distinct.size() < 2)
        fail(ErrorCode::IncompleteGrid, std::string(axis) + " axis needs at least two wavelengths");
    const double step = (distinct.back() - distinct.front()) / static_cast<double>(distinct.size() - 1);
    for (std::size_t k = 1; k < distinct.size(); ++k) {
        const double gap = distinct[k] - distinct[k - 1];
        if (std::abs(gap - step) > kTsiStepTolerance * step)
            fail(ErrorCode::NonUniform, std::string(axis) + " wavelength steps are not uniform");
    }
    return {distinct.front(), step, distinct.size()};
}

} // namespace detail

/// Assembles a complete rectangular grid from long-form records in any order.
inline TsiGrid load_tsi(std::span<const TsiRecord> records)
{
    if (records.empty())
        fail(ErrorCode::IncompleteGrid, "no TSI records");
    std::vector<double> ls;
    std::vector<double> li;
    ls.reserve(records.size());
    li.reserve(records.size());
    for (const auto& r : records) {
        if (!(r.counts >= 0.0))
            fail(ErrorCode::NegativeCount, "negative count in TSI record");
        if (!std::isfinite(r.lambda_s) || !std::isfinite(r.lambda_i) || !std::isfinite(r.counts))
            fail(ErrorCode::ParseError, "non-finite TSI record");
        ls.push_back(r.lambda_s);
        li.push_back(r.lambda_i);
    }
    const auto gs = detail::infer_grid(detail::distinct_values(std::move(ls)), "signal");
    const auto gi = detail::infer_grid(detail::distinct_values(std::move(li)), "idler");

    std::vector<double> counts(gs.count * gi.count, 0.0);
    std::vector<bool> filled(counts.size(), false);
    for (const auto& r : records) {
        const auto s = static_cast<std::size_t>(std::llround((r.lambda_s - gs.start) / gs.step));
        const auto i = static_cast<std::size_t>(std::llround((r.lambda_i - gi.start) / gi.step));
        const std::size_t cell = s * gi.count + i;
        if (filled[cell])
            fail(ErrorCode::IncompleteGrid, "duplicate TSI cell");
        filled[cell] = true;
        counts[cell] = r.counts;
    }
    if (records.size() != counts.size())
        fail(ErrorCode::IncompleteGrid, "TSI records do not cover every cell of the grid");
    return {gs, gi, std::move(counts)};
}

// ---------------------------------------------------------------------------
// Projections

enum class ProjectionAxis
{
    x,
    diagonal,
    antidiagonal,
};

inline std::string_view to_string(ProjectionAxis a) noexcept
{
    switch (a) {
    case ProjectionAxis::x: return "x";
    case ProjectionAxis::diagonal: return "diagonal";
    case ProjectionAxis::antidiagonal: return "antidiagonal";
    }
    return "x";
}

/// Counts summed onto a 1D axis.  The x axis is the signal wavelength.  The
/// diagonal and antidiagonal axes are the rotated coordinates
/// (ls + li)/sqrt(2) and (ls - li)/sqrt(2), so distances along them are
/// distances in the (ls, li) plane and bins are step/sqrt(2) apart.
struct TsiProfile
{
    ProjectionAxis axis;
    double start; // m
    double step;  // m
    std::vector<double> values;

    double coordinate(std::size_t k) const noexcept { return start + static_cast<double>(k) * step; }

    double total() const noexcept
    {
        double sum = 0.0;
        for (double v : values)
            sum += v;
        return sum;
    }
};

/// Exact, mass-conserving binning by signal index (x), index sum (diagonal)
/// or index difference (antidiagonal).
inline TsiProfile project(const TsiGrid& tsi, ProjectionAxis axis)
{
    const std::size_t ns = tsi.rows();
    const std::size_t ni = tsi.cols();
    if (axis == ProjectionAxis::x) {
        std::vector<double> v(ns, 0.0);
        for (std::size_t s = 0; s < ns; ++s)
            for (std::size_t i = 0; i < ni; ++i)
                v[s] += tsi(s, i);
        return {axis, tsi.lambda_s().start, tsi.lambda_s().step, std::move(v)};
    }
    if (!tsi.is_square())
        fail(ErrorCode::NotSquare, "diagonal projections need a square grid with equal steps");

    const std::size_t n = ns;
    const double step = tsi.lambda_s().step;
    std::vector<double> v(2 * n - 1, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = axis == ProjectionAxis::diagonal ? s + i : s + (n - 1) - i;
            v[k] += tsi(s, i);
        }
    }
    const double start = axis == ProjectionAxis::diagonal
                             ? (tsi.lambda_s().start + tsi.lambda_i().start) / std::numbers::sqrt2
                             : (tsi.lambda_s().start - tsi.lambda_i().back()) / std::numbers::sqrt2;
    return {axis, start, step / std::numbers::sqrt2, std::move(v)};
}

/// Subtracts the median of the lowest decile of cell counts, clipping at zero.
inline TsiGrid subtract_background(const TsiGrid& tsi)
{
    std::vector<double> sorted(tsi.counts().begin(), tsi.counts().end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t decile = std::max<std::size_t>(1, sorted.size() / 10);
    const double background = decile % 2 == 1 ? sorted[decile / 2]
                                               : 0.5 * (sorted[decile / 2 - 1] + sorted[decile / 2]);
    std::vector<double> out(sorted.size());
    std::transform(tsi.counts().begin(), tsi.counts().end(), out.begin(),
                   [background](double c) { return std::max(0.0, c - background); });
    return {tsi.lambda_s(), tsi.lambda_i(), std::move(out)};
}

struct BandwidthReport
{
    double delta_lambda; // m
    double delta_nu;     // Hz
};

inline BandwidthReport profile_bandwidth_report(const TsiProfile& profile, double center_wavelength)
{
    std::vector<double> x(profile.values.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        x[k] = profile.coordinate(k);
    const double dl = fwhm(x, profile.values);
    return {dl, wavelength_bandwidth_to_frequency(dl, center_wavelength)};
}

// ---------------------------------------------------------------------------
// Synthetic data

/// Correlated Gaussian TSI centred on (center, center) whose projections have
/// the requested FWHMs along x, the diagonal and the antidiagonal (rotated
/// coordinates as in `project`).  The idler width follows from the three;
/// InvalidArgument if they admit no positive-definite covariance.
inline TsiGrid correlated_gaussian_tsi(double fwhm_x, double fwhm_diagonal, double fwhm_antidiagonal, double center,
                                       double step, std::size_t count, double peak_counts)
{
    auto variance = [](double f) { return (f / kGaussianFwhmPerSigma) * (f / kGaussianFwhmPerSigma); };
    const double vs = variance(fwhm_x);
    const double vd = variance(fwhm_diagonal);
    const double va = variance(fwhm_antidiagonal);
    const double vi = vd + va - vs;
    const double cov = 0.5 * (vd - va);
    const double det = vs * vi - cov * cov;
    if (!(vi > 0.0) || !(det > 0.0))
        fail(ErrorCode::InvalidArgument, "projection widths admit no positive-definite Gaussian");

    const WavelengthGrid g{center - 0.5 * static_cast<double>(count - 1) * step, step, count};
    std::vector<double> counts(count * count);
    for (std::size_t s = 0; s < count; ++s) {
        const double x = g.at(s) - center;
        for (std::size_t i = 0; i < count; ++i) {
            const double y = g.at(i) - center;
            const double q = (vi * x * x - 2.0 * cov * x * y + vs * y * y) / det;
            counts[s * count + i] = peak_counts * std::exp(-0.5 * q);
        }
    }
    return {g, g, std::move(counts)};
}

} // namespace bwkt
