#pragma once

// Least-squares fit of interferogram envelopes: visibility and temporal FWHM
// under a Gaussian or triangular envelope, with optional carrier.

#include "core.hpp"
#include "extract.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

namespace bwkt
{

enum class EnvelopeModel
{
    gaussian,
    triangle,
};

inline std::string_view to_string(EnvelopeModel m) noexcept
{
    return m == EnvelopeModel::gaussian ? "gaussian" : "triangle";
}

struct FitReport
{
    EnvelopeModel model;
    double temporal_fwhm;          // s
    double visibility;
    double visibility_uncertainty; // one standard deviation
    double residual_rms;           // probability units
    double center;                 // s
    double carrier;                // rad/s, 0 for HOM
    double baseline;               // input units
};

namespace detail
{

// Parameters, in sample units of the delay grid:
//   0 baseline b (relative to the initial baseline guess)
//   1 visibility V
//   2 centre t0 (samples)
//   3 envelope FWHM w (samples)
//   4 carrier k (rad/sample), 5 phase phi      -- carrier kinds only
struct EnvelopeResiduals
{
    using Scalar = double;
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;
    enum
    {
        InputsAtCompileTime = Eigen::Dynamic,
        ValuesAtCompileTime = Eigen::Dynamic,
    };

    const std::vector<double>* u;
    const std::vector<double>* y;
    const std::vector<double>* sigma;
    EnvelopeModel model;
    bool carrier;
    double sign;

    int inputs() const { return carrier ? 6 : 4; }
    int values() const { return static_cast<int>(y->size()); }

    double envelope_at(double x, double w) const
    {
        w = std::abs(w);
        if (model == EnvelopeModel::gaussian)
            return std::exp(-4.0 * std::numbers::ln2 * x * x / (w * w));
        return std::max(0.0, 1.0 - std::abs(x) / w);
    }

    double predict(const Eigen::VectorXd& p, double t) const
    {
        const double x = t - p[2];
        double fringe = envelope_at(x, p[3]);
        if (carrier)
            fringe *= std::cos(p[4] * x + p[5]);
        return p[0] * (1.0 + sign * p[1] * fringe);
    }

    int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& r) const
    {
        for (std::size_t n = 0; n < y->size(); ++n)
            r[static_cast<Eigen::Index>(n)] = ((*y)[n] - predict(p, (*u)[n])) / (*sigma)[n];
        return 0;
    }
};

inline Eigen::MatrixXd central_jacobian(const EnvelopeResiduals& f, const Eigen::VectorXd& p)
{
    Eigen::MatrixXd jac(f.values(), f.inputs());
    Eigen::VectorXd hi(f.values());
    Eigen::VectorXd lo(f.values());
    for (int j = 0; j < f.inputs(); ++j) {
        const double h = 1e-6 * std::max(1.0, std::abs(p[j]));
        Eigen::VectorXd q = p;
        q[j] = p[j] + h;
        f(q, hi);
        q[j] = p[j] - h;
        f(q, lo);
        jac.col(j) = (hi - lo) / (2.0 * h);
    }
    return jac;
}

// Carrier in rad/sample from the zero-padded spectrum peak, refined by a
// parabola through the three largest bins.
inline double carrier_guess(std::span<const double> s)
{
    const std::size_t m = next_power_of_two(16 * s.size());
    std::vector<complex> buffer(m, complex(0.0));
    std::copy(s.begin(), s.end(), buffer.begin());
    const auto y = fft(buffer, FftSign::negative);
    std::size_t k = 1;
    for (std::size_t j = 1; j < m / 2; ++j) {
        if (std::abs(y[j]) > std::abs(y[k]))
            k = j;
    }
    const double a = std::abs(y[k - 1]);
    const double b = std::abs(y[k]);
    const double c = std::abs(y[k + 1]);
    const double denom = a - 2.0 * b + c;
    const double shift = denom != 0.0 ? 0.5 * (a - c) / denom : 0.0;
    return kTwoPi * (static_cast<double>(k) + shift) / static_cast<double>(m);
}

} // namespace detail

/// Fits P(tau) = b [1 +- V E(tau - t0) cos(wc (tau - t0) + phi)], with the
/// carrier present for MZI and NOON patterns and the minus sign for HOM.
/// Counts are weighted by Poisson variances (one reweighting pass against
/// the model); probabilities are fitted unweighted and the covariance is
/// scaled by the reduced chi-square.
inline FitReport fit_envelope(const Interferogram& ig, EnvelopeModel model)
{
    const std::size_t n = ig.values().size();
    if (n < 16)
        fail(ErrorCode::TooFewSamples, "fit needs at least 16 samples");
    const FringeSignal sig = detrend(ig);
    const bool carrier = sig.kind != InterferenceKind::homi;
    const double dt = sig.delays.step();
    const bool counts = ig.units() == Units::counts;

    const double scale = counts ? detail::edge_baseline(ig.values()) : 0.5;
    if (!(scale > 0.0))
        fail(ErrorCode::InvalidArgument, "pattern has zero baseline");
    std::vector<double> u(n);
    std::vector<double> y(n);
    std::vector<double> sigma(n, 1.0);
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = sig.delays.at(k) / dt;
        y[k] = ig.values()[k] / scale;
        if (counts)
            sigma[k] = std::sqrt(std::max(ig.values()[k], 1.0)) / scale;
    }

    // Initial values from the envelope.
    const auto env = envelope(sig);
    const auto peak = static_cast<std::size_t>(std::max_element(env.begin(), env.end()) - env.begin());
    double width = 0.25 * static_cast<double>(n);
    try {
        width = fwhm(u, env);
    } catch (const Error&) {
        // keep the window-based guess
    }
    Eigen::VectorXd p(carrier ? 6 : 4);
    p[0] = 1.0;
    p[1] = std::clamp(env[peak], 0.05, 1.0);
    p[2] = u[peak];
    p[3] = std::max(width, 2.0);
    if (carrier) {
        p[4] = detail::carrier_guess(sig.values);
        p[5] = std::arg(analytic_signal(sig.values)[peak]);
    }

    detail::EnvelopeResiduals f{&u, &y, &sigma, model, carrier, carrier ? 1.0 : -1.0};
    auto solve = [&] {
        Eigen::NumericalDiff<detail::EnvelopeResiduals, Eigen::Central> diff(f);
        Eigen::LevenbergMarquardt<decltype(diff)> lm(diff);
        lm.parameters.maxfev = 4000;
        lm.parameters.xtol = 1e-12;
        lm.parameters.ftol = 1e-12;
        lm.minimize(p);
    };
    solve();
    if (counts) {
        for (std::size_t k = 0; k < n; ++k)
            sigma[k] = std::sqrt(std::max(f.predict(p, u[k]) * scale, 1.0)) / scale;
        solve();
    }

    // Fold a negative visibility into the carrier phase.
    if (carrier && p[1] < 0.0) {
        p[1] = -p[1];
        p[5] += kPi;
    }
    p[3] = std::abs(p[3]);

    Eigen::VectorXd r(static_cast<Eigen::Index>(n));
    f(p, r);
    const Eigen::MatrixXd jac = detail::central_jacobian(f, p);
    Eigen::MatrixXd cov = (jac.transpose() * jac).completeOrthogonalDecomposition().pseudoInverse();
    const auto dof = static_cast<double>(n) - static_cast<double>(p.size());
    if (!counts)
        cov *= r.squaredNorm() / dof;

    double residual = 0.0;
    double signal = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = y[k] - f.predict(p, u[k]);
        residual += d * d;
        signal += (y[k] - p[0]) * (y[k] - p[0]);
    }
    const double to_probability = 1.0 / (2.0 * p[0]);
    const double residual_rms = std::sqrt(residual / static_cast<double>(n)) * to_probability;
    const double signal_rms = std::sqrt(signal / static_cast<double>(n)) * to_probability;
    if (!std::isfinite(residual_rms) || residual_rms > 0.2 * signal_rms)
        fail(ErrorCode::FitDiverged, "residual RMS " + std::to_string(residual_rms) + " exceeds 20% of signal RMS "
                                         + std::to_string(signal_rms));

    return {model,
            p[3] * dt,
            p[1],
            std::sqrt(std::max(cov(1, 1), 0.0)),
            residual_rms,
            p[2] * dt,
            carrier ? p[4] / dt : 0.0,
            p[0] * scale};
}

} // namespace bwkt
