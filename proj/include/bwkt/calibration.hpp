#pragma once

// Calibration of the linearized phase-matching coefficient against a target
// difference-frequency bandwidth.

#include "extract.hpp"
#include "interference.hpp"
#include "models.hpp"

#include <cmath>

namespace bwkt
{

/// FWHM (rad/s) of the difference-frequency marginal of the GVM-symmetric model.
inline double difference_bandwidth(const PumpSpec& pump, double length, double mismatch, const FrequencyGrid& grid)
{
    const auto jsa = build_jsa(pump, PhaseMatchSpec::gvm_symmetric(length, mismatch), grid);
    return fwhm(marginal_projection(jsa, Sign::minus));
}

/// Group-delay mismatch D (s/m) whose GVM-symmetric model has a
/// difference-frequency FWHM of `target_fwhm` (rad/s), found by bisection on
/// the projected marginal.  The bracket is a factor of two either side of the
/// pure-sinc estimate 8 x_half / (L * target).
inline double calibrate_group_delay_mismatch(const PumpSpec& pump, double length, double target_fwhm,
                                             const FrequencyGrid& grid, double rel_tol = 1e-9)
{
    if (!(target_fwhm > 0.0) || !(length > 0.0))
        fail(ErrorCode::InvalidArgument, "calibration target and crystal length must be positive");
    const double estimate = 8.0 * kSincSquaredHalfMax / (length * target_fwhm);
    double lo = 0.5 * estimate; // wider than target
    double hi = 2.0 * estimate; // narrower than target
    if (difference_bandwidth(pump, length, lo, grid) < target_fwhm
        || difference_bandwidth(pump, length, hi, grid) > target_fwhm)
        fail(ErrorCode::GridTooNarrow, "calibration target is not bracketed on this grid");
    while (hi - lo > rel_tol * estimate) {
        const double mid = 0.5 * (lo + hi);
        if (difference_bandwidth(pump, length, mid, grid) > target_fwhm)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace bwkt
