#pragma once

// Subcommands of the bwkt tool.  Each returns a process exit status:
// 0 success, 1 tolerance failure, 2 input/parse/config error,
// 3 numerical precondition error.

#include "extract.hpp"
#include "fit.hpp"
#include "interference.hpp"
#include "io.hpp"
#include "models.hpp"
#include "noise.hpp"
#include "tsi.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace bwkt
{

enum ExitStatus : int
{
    kExitSuccess = 0,
    kExitTolerance = 1,
    kExitInput = 2,
    kExitNumerical = 3,
};

inline int exit_status(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ZeroSpectrum:
    case ErrorCode::GridTooNarrow:
    case ErrorCode::NotNormalized:
    case ErrorCode::AsymmetricJsa:
    case ErrorCode::ComplexJsa:
    case ErrorCode::NyquistViolation:
    case ErrorCode::WindowTooShort:
    case ErrorCode::TooFewSamples:
    case ErrorCode::NoCrossing:
    case ErrorCode::FitDiverged: return kExitNumerical;
    default: return kExitInput;
    }
}

struct CommandOptions
{
    std::optional<std::string> config_path;
    std::optional<std::string> kind;
    std::string input;
    std::string out;
    std::optional<double> tolerance;
    std::optional<std::string> model;
};

// ---------------------------------------------------------------------------
// Sources from a configuration

inline JointSpectralAmplitude make_jsa(const RunConfig& c)
{
    const auto grid = c.frequency_grid();
    switch (c.source) {
    case SourceKind::gvm_jsa: return build_jsa(c.pump(), c.phase_match(), grid);
    case SourceKind::separable:
        return separable_jsa({c.plus_profile, thz_to_angular(c.plus_fwhm_thz)},
                             {c.minus_profile, thz_to_angular(c.minus_fwhm_thz)}, 2.0 * c.center_frequency(), grid);
    case SourceKind::gaussian_spectrum: break;
    }
    fail(ErrorCode::ConfigError, "source gaussian_spectrum has no two-photon amplitude");
}

inline Spectrum1D make_one_photon_spectrum(const RunConfig& c)
{
    if (c.source == SourceKind::gaussian_spectrum)
        return gaussian_spectrum(c.center_frequency(), thz_to_angular(c.spectrum_fwhm_thz), c.frequency_grid());
    return signal_marginal(make_jsa(c));
}

inline Interferogram simulate(const RunConfig& c, InterferenceKind kind)
{
    const auto delays = c.delays(kind);
    Interferogram ig = [&] {
        switch (kind) {
        case InterferenceKind::mzi: return mzi_pattern(make_one_photon_spectrum(c), delays);
        case InterferenceKind::homi: return biphoton_pattern_symmetric(make_jsa(c), Sign::minus, delays, c.symmetry());
        case InterferenceKind::nooni: return biphoton_pattern_symmetric(make_jsa(c), Sign::plus, delays, c.symmetry());
        case InterferenceKind::unknown: break;
        }
        fail(ErrorCode::UnknownKind, "interferogram kind is not set");
    }();
    if (c.visibility < 1.0)
        ig = with_visibility(ig, c.visibility);
    if (c.units == Units::counts)
        ig = to_counts(ig, c.peak_counts, c.noise, c.seed);
    return ig;
}

// ---------------------------------------------------------------------------
// Helpers

namespace detail
{

inline RunConfig resolve_config(const CommandOptions& o)
{
    RunConfig c = o.config_path ? load_config(*o.config_path) : RunConfig{};
    if (o.tolerance) {
        c.tolerance = *o.tolerance;
        c.validate();
    }
    return c;
}

inline std::ofstream open_output(const std::string& path)
{
    if (path.empty())
        fail(ErrorCode::ConfigError, "missing --out");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorCode::IoError, "cannot write '" + path + "'");
    return out;
}

inline std::ifstream open_input(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrorCode::IoError, "cannot open '" + path + "'");
    return in;
}

inline Interferogram read_interferogram_file(const CommandOptions& o)
{
    auto in = open_input(o.input);
    auto ig = read_interferogram(in);
    if (o.kind && parse_kind(*o.kind) != ig.kind())
        fail(ErrorCode::ConfigError, "--kind " + *o.kind + " contradicts file kind "
                                         + std::string(to_string(ig.kind())));
    return ig;
}

inline std::string fixed(double v, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

inline std::string scientific(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

} // namespace detail

/// Runs `body`, translating library errors into a diagnostic line and an exit status.
template<typename Body>
int run_command(std::ostream& err, Body&& body)
{
    try {
        return body();
    } catch (const Error& e) {
        err << "error code=" << to_string(e.code()) << " exit=" << exit_status(e.code()) << " message=\""
            << e.what() << "\"\n";
        return exit_status(e.code());
    } catch (const std::exception& e) {
        err << "error code=Internal exit=" << kExitInput << " message=\"" << e.what() << "\"\n";
        return kExitInput;
    }
}

// ---------------------------------------------------------------------------
// Subcommands

inline int cmd_simulate(const CommandOptions& o, std::ostream& out, std::ostream& err)
{
    return run_command(err, [&] {
        const auto config = detail::resolve_config(o);
        if (!o.kind)
            fail(ErrorCode::ConfigError, "simulate needs --kind");
        const auto kind = parse_kind(*o.kind);
        const auto ig = simulate(config, kind);
        auto file = detail::open_output(o.out);
        write_interferogram(file, ig);
        out << "kind=" << to_string(kind) << " samples=" << ig.values().size() << " units=" << to_string(ig.units())
            << " out=" << o.out << '\n';
        return int{kExitSuccess};
    });
}

inline int cmd_extract(const CommandOptions& o, std::ostream& out, std::ostream& err)
{
    return run_command(err, [&] {
        const auto config = detail::resolve_config(o);
        const auto ig = detail::read_interferogram_file(o);
        const auto result = extract_spectrum(ig, config.extract_options(ig.kind()));
        auto file = detail::open_output(o.out);
        write_spectrum(file, result.spectrum);
        out << "fwhm_thz=" << format_number(angular_to_thz(fwhm(result.spectrum)))
            << " center_thz=" << format_number(angular_to_thz(result.spectrum.center()))
            << " axis=" << to_string(result.spectrum.axis()) << '\n';
        if (result.negative_warning)
            err << "warning: negative spectral values deeper than 1% of the peak were clipped\n";
        return int{kExitSuccess};
    });
}

inline int cmd_project(const CommandOptions& o, std::ostream& out, std::ostream& err)
{
    return run_command(err, [&] {
        const auto config = detail::resolve_config(o);
        auto in = detail::open_input(o.input);
        const auto records = read_tsi_records(in);
        TsiGrid tsi = load_tsi(records);
        if (config.subtract_background)
            tsi = subtract_background(tsi);
        if (o.out.empty())
            fail(ErrorCode::ConfigError, "project needs --out prefix");

        std::string report;
        for (const auto axis : {ProjectionAxis::x, ProjectionAxis::diagonal, ProjectionAxis::antidiagonal}) {
            const auto profile = project(tsi, axis);
            auto file = detail::open_output(o.out + "_" + std::string(to_string(axis)) + ".csv");
            write_profile(file, profile);
            std::string line = "axis=" + std::string(to_string(axis));
            try {
                const auto bw = profile_bandwidth_report(profile, config.tsi_center_nm * 1e-9);
                line += " delta_lambda_nm=" + format_number(bw.delta_lambda * 1e9)
                        + " delta_nu_thz=" + format_number(bw.delta_nu * 1e-12);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoCrossing)
                    throw;
                line += " delta_lambda_nm=unresolved delta_nu_thz=unresolved";
            }
            line += " mass=" + format_number(profile.total()) + '\n';
            report += line;
        }
        auto file = detail::open_output(o.out + "_report.txt");
        file << "center_nm=" << format_number(config.tsi_center_nm) << '\n' << report;
        out << report;
        return int{kExitSuccess};
    });
}

struct RoundtripRow
{
    std::string name;
    double reference_fwhm; // Hz
    double extracted_fwhm; // Hz
    double relative_error;
    double shape_error;
    bool pass;
};

/// Source -> pattern -> extracted spectrum, compared against the spectrum the
/// pattern was simulated from, for the one-photon and both two-photon cases.
inline std::vector<RoundtripRow> roundtrip(const RunConfig& c)
{
    const auto jsa = make_jsa(c);
    std::vector<RoundtripRow> rows;
    auto compare = [&](std::string name, const Spectrum1D& reference, const Interferogram& pattern) {
        const auto extracted = extract_spectrum(pattern, c.extract_options(pattern.kind())).spectrum;
        const double ref = angular_to_thz(fwhm(reference)) * 1e12;
        const double got = angular_to_thz(fwhm(extracted)) * 1e12;
        const double rel = std::abs(got - ref) / ref;
        const double shape = spectral_shape_error(extracted, reference);
        rows.push_back({std::move(name), ref, got, rel, shape, rel <= c.tolerance && shape <= c.shape_tolerance});
    };

    const auto one_photon = signal_marginal(jsa);
    compare("mzi", one_photon, mzi_pattern(one_photon, c.delays(InterferenceKind::mzi)));
    compare("homi", marginal_projection(jsa, Sign::minus),
            biphoton_pattern_symmetric(jsa, Sign::minus, c.delays(InterferenceKind::homi), c.symmetry()));
    compare("nooni", marginal_projection(jsa, Sign::plus),
            biphoton_pattern_symmetric(jsa, Sign::plus, c.delays(InterferenceKind::nooni), c.symmetry()));
    return rows;
}

inline int cmd_roundtrip(const CommandOptions& o, std::ostream& out, std::ostream& err)
{
    return run_command(err, [&] {
        const auto config = detail::resolve_config(o);
        const auto rows = roundtrip(config);
        out << "case   reference_thz  extracted_thz  rel_error  shape_error  status\n";
        bool all = true;
        for (const auto& r : rows) {
            char line[160];
            std::snprintf(line, sizeof line, "%-6s %13s  %13s  %9s  %11s  %s\n", r.name.c_str(),
                          detail::fixed(r.reference_fwhm * 1e-12, 6).c_str(),
                          detail::fixed(r.extracted_fwhm * 1e-12, 6).c_str(), detail::scientific(r.relative_error).c_str(),
                          detail::scientific(r.shape_error).c_str(), r.pass ? "PASS" : "FAIL");
            out << line;
            all = all && r.pass;
        }
        out << "tolerance=" << format_number(config.tolerance) << " shape_tolerance="
            << format_number(config.shape_tolerance) << " result=" << (all ? "PASS" : "FAIL") << '\n';
        return all ? int{kExitSuccess} : int{kExitTolerance};
    });
}

inline int cmd_fit(const CommandOptions& o, std::ostream& out, std::ostream& err)
{
    return run_command(err, [&] {
        const auto ig = detail::read_interferogram_file(o);
        const EnvelopeModel model = o.model ? parse_envelope_model(*o.model)
                                            : (ig.kind() == InterferenceKind::mzi ? EnvelopeModel::gaussian
                                                                                  : EnvelopeModel::triangle);
        const auto r = fit_envelope(ig, model);
        out << "model=" << to_string(r.model) << " visibility=" << format_number(r.visibility)
            << " visibility_uncertainty=" << format_number(r.visibility_uncertainty)
            << " temporal_fwhm_fs=" << format_number(r.temporal_fwhm * 1e15)
            << " residual_rms=" << format_number(r.residual_rms) << " center_fs=" << format_number(r.center * 1e15);
        if (r.carrier > 0.0)
            out << " carrier_period_fs=" << format_number(kTwoPi / r.carrier * 1e15);
        out << '\n';
        return int{kExitSuccess};
    });
}

} // namespace bwkt
