#pragma once

// Frozen default parameters.  Bump kVersion whenever a value changes; config
// files may pin the version they were written against.

#include <cstddef>

namespace bwkt::defaults
{

inline constexpr int kVersion = 1;

inline constexpr double kPumpWavelength = 792e-9; // m
inline constexpr double kPumpDuration = 120e-15;  // s, intensity FWHM
inline constexpr double kCrystalLength = 30e-3;   // m

/// Target difference-frequency FWHM (Hz) of the default two-photon source.
inline constexpr double kDifferenceBandwidth = 0.22e12;
/// Group-delay mismatch D (s/m), group delays +-D/2.  Calibrated by
/// calibrate_group_delay_mismatch against kDifferenceBandwidth on the default
/// frequency grid; regenerate when the grid or the target changes.
inline constexpr double kGroupDelayMismatch = 2.6862884908805103e-10;

/// One-photon Gaussian source.
inline constexpr double kSpectrumFwhm = 2.18e12; // Hz
inline constexpr double kSpectrumCenterWavelength = 1584e-9; // m

/// Frequency grid per photon, centred on the degenerate frequency.
inline constexpr double kFrequencyStep = 0.02e12; // Hz
inline constexpr std::size_t kFrequencyCount = 1024;

inline constexpr double kMziDelayStep = 0.5e-15;
inline constexpr std::size_t kMziDelayCount = 4001;
inline constexpr double kHomiDelayStep = 10e-15;
inline constexpr std::size_t kHomiDelayCount = 1601;
inline constexpr double kNooniDelayStep = 0.5e-15;
inline constexpr std::size_t kNooniDelayCount = 1201;

/// Separable sum/difference-frequency source: sinc^2 along w+ (a 202 fs
/// triangular NOON envelope) and a Gaussian along w-.
inline constexpr double kPlusFwhm = 4.3856e12;  // Hz
inline constexpr double kMinusFwhm = 1.5e12;   // Hz

inline constexpr double kTsiCenterWavelength = 1584e-9; // m

} // namespace bwkt::defaults
