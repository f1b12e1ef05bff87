#pragma once

// File formats and run configuration.  Files carry fs / THz / nm; everything
// is converted to seconds, rad/s and metres on the way in.
//
//   interferogram:  # kind=<mzi|homi|nooni> units=<probability|counts>
//                   delay_fs,value
//   spectrum:       # axis=<omega|omega_plus|omega_minus> center_thz=<v>
//                   freq_thz,intensity        (intensity per THz)
//   tsi:            lambda_s_nm,lambda_i_nm,counts
//   profile:        # axis=<x|diagonal|antidiagonal>
//                   coordinate_nm,counts
//
// Numbers are written in the shortest form that reads back to the same double.

#include "core.hpp"
#include "defaults.hpp"
#include "fit.hpp"
#include "interference.hpp"
#include "models.hpp"
#include "noise.hpp"
#include "tsi.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace bwkt
{

// ---------------------------------------------------------------------------
// Numbers and names

inline std::string format_number(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc())
        fail(ErrorCode::InvalidArgument, "number cannot be formatted");
    return {buf, end};
}

/// Unit-converted columns (axes, per-THz intensities) carry 12 significant
/// digits, so write -> read -> write reproduces the text.
inline std::string format_scaled(double v)
{
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    if (ec != std::errc())
        fail(ErrorCode::InvalidArgument, "number cannot be formatted");
    return {buf, end};
}

inline std::string_view trim(std::string_view s) noexcept
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size() || !std::isfinite(v))
        fail(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
    return v;
}

inline std::size_t parse_count(std::string_view text)
{
    text = trim(text);
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        fail(ErrorCode::ParseError, "not a nonnegative integer: '" + std::string(text) + "'");
    return v;
}

inline std::string_view to_string(InterferenceKind k) noexcept
{
    switch (k) {
    case InterferenceKind::mzi: return "mzi";
    case InterferenceKind::homi: return "homi";
    case InterferenceKind::nooni: return "nooni";
    case InterferenceKind::unknown: break;
    }
    return "unknown";
}

inline InterferenceKind parse_kind(std::string_view s)
{
    if (s == "mzi")
        return InterferenceKind::mzi;
    if (s == "homi")
        return InterferenceKind::homi;
    if (s == "nooni")
        return InterferenceKind::nooni;
    fail(ErrorCode::UnknownKind, "unknown interferogram kind '" + std::string(s) + "'");
}

inline std::string_view to_string(Units u) noexcept
{
    return u == Units::counts ? "counts" : "probability";
}

inline Units parse_units(std::string_view s)
{
    if (s == "probability")
        return Units::probability;
    if (s == "counts")
        return Units::counts;
    fail(ErrorCode::ParseError, "unknown units '" + std::string(s) + "'");
}

inline std::string_view to_string(SpectralAxis a) noexcept
{
    switch (a) {
    case SpectralAxis::omega: return "omega";
    case SpectralAxis::omega_plus: return "omega_plus";
    case SpectralAxis::omega_minus: return "omega_minus";
    }
    return "omega";
}

inline SpectralAxis parse_axis(std::string_view s)
{
    if (s == "omega")
        return SpectralAxis::omega;
    if (s == "omega_plus")
        return SpectralAxis::omega_plus;
    if (s == "omega_minus")
        return SpectralAxis::omega_minus;
    fail(ErrorCode::ParseError, "unknown spectral axis '" + std::string(s) + "'");
}

inline EnvelopeModel parse_envelope_model(std::string_view s)
{
    if (s == "gaussian")
        return EnvelopeModel::gaussian;
    if (s == "triangle")
        return EnvelopeModel::triangle;
    fail(ErrorCode::ParseError, "unknown envelope model '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// CSV plumbing

namespace detail
{

struct CsvTable
{
    std::map<std::string, std::string, std::less<>> meta; // key=value pairs from '#' lines
    std::vector<std::vector<double>> rows;
};

inline std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

// Reads a whole CSV with the given header.  The file must end with a newline;
// anything else is taken as truncation.
inline CsvTable read_csv(std::istream& in, std::string_view header)
{
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    if (text.empty())
        fail(ErrorCode::ParseError, "empty input");
    if (text.back() != '\n')
        fail(ErrorCode::ParseError, "input is truncated (no final newline)");

    CsvTable table;
    bool seen_header = false;
    const std::size_t columns = split(header, ',').size();
    std::size_t line_no = 0;
    for (std::string_view line : split(std::string_view(text).substr(0, text.size() - 1), '\n')) {
        ++line_no;
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            for (auto token : split(line.substr(1), ' ')) {
                token = trim(token);
                const auto eq = token.find('=');
                if (eq != std::string_view::npos)
                    table.meta.emplace(std::string(token.substr(0, eq)), std::string(token.substr(eq + 1)));
            }
            continue;
        }
        if (!seen_header) {
            if (line != header)
                fail(ErrorCode::ParseError, "expected header '" + std::string(header) + "'");
            seen_header = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != columns)
            fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected "
                                            + std::to_string(columns) + " fields");
        std::vector<double> row;
        row.reserve(columns);
        for (auto f : fields)
            row.push_back(parse_number(f));
        table.rows.push_back(std::move(row));
    }
    if (!seen_header)
        fail(ErrorCode::ParseError, "missing header '" + std::string(header) + "'");
    return table;
}

inline std::string require_meta(const CsvTable& t, std::string_view key)
{
    const auto it = t.meta.find(key);
    if (it == t.meta.end())
        fail(ErrorCode::ParseError, "missing '# " + std::string(key) + "=' comment");
    return it->second;
}

// Uniform grid (start, step) from a column, checked to 1e-6 of the step.
inline std::pair<double, double> uniform_axis(const std::vector<std::vector<double>>& rows, const char* what)
{
    if (rows.size() < 2)
        fail(ErrorCode::ParseError, std::string(what) + " needs at least two samples");
    const double first = rows.front()[0];
    const double step = (rows.back()[0] - first) / static_cast<double>(rows.size() - 1);
    if (!(step > 0.0))
        fail(ErrorCode::NonUniformGrid, std::string(what) + " axis is not increasing");
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (std::abs(rows[k][0] - (first + static_cast<double>(k) * step)) > 1e-6 * step)
            fail(ErrorCode::NonUniformGrid, std::string(what) + " axis is not uniform");
    }
    return {first, step};
}

} // namespace detail

// ---------------------------------------------------------------------------
// Interferograms

inline void write_interferogram(std::ostream& out, const Interferogram& ig)
{
    out << "# kind=" << to_string(ig.kind()) << " units=" << to_string(ig.units()) << '\n';
    out << "delay_fs,value\n";
    const auto& d = ig.delays();
    for (std::size_t k = 0; k < ig.values().size(); ++k) {
        const double tau = std::abs(d.at(k)) < 1e-6 * d.step() ? 0.0 : d.at(k);
        out << format_scaled(tau * 1e15) << ',' << format_number(ig.values()[k]) << '\n';
    }
}

inline Interferogram read_interferogram(std::istream& in)
{
    const auto table = detail::read_csv(in, "delay_fs,value");
    const auto kind = parse_kind(detail::require_meta(table, "kind"));
    const auto units = parse_units(detail::require_meta(table, "units"));
    const auto [start, step] = detail::uniform_axis(table.rows, "delay");
    std::vector<double> values;
    values.reserve(table.rows.size());
    for (const auto& r : table.rows)
        values.push_back(r[1]);
    DelayGrid grid(start * 1e-15, step * 1e-15, values.size());
    if (grid.is_symmetric())
        grid = DelayGrid::symmetric(step * 1e-15, values.size());
    return {grid, std::move(values), kind, units};
}

// ---------------------------------------------------------------------------
// Spectra

inline void write_spectrum(std::ostream& out, const Spectrum1D& s)
{
    out << "# axis=" << to_string(s.axis()) << " center_thz=" << format_scaled(angular_to_thz(s.center())) << '\n';
    out << "freq_thz,intensity\n";
    const double per_thz = kTwoPi * 1e12;
    for (std::size_t k = 0; k < s.grid().size(); ++k)
        out << format_scaled(angular_to_thz(s.grid().at(k))) << ',' << format_scaled(s.values()[k] * per_thz) << '\n';
}

inline Spectrum1D read_spectrum(std::istream& in)
{
    const auto table = detail::read_csv(in, "freq_thz,intensity");
    const auto axis = parse_axis(detail::require_meta(table, "axis"));
    const double center = parse_number(detail::require_meta(table, "center_thz"));
    const auto [start, step] = detail::uniform_axis(table.rows, "frequency");
    const double per_thz = kTwoPi * 1e12;
    std::vector<double> values;
    values.reserve(table.rows.size());
    for (const auto& r : table.rows)
        values.push_back(r[1] / per_thz);
    return {FrequencyGrid(thz_to_angular(start), thz_to_angular(step), values.size()), std::move(values),
            thz_to_angular(center), axis};
}

// ---------------------------------------------------------------------------
// TSI

inline std::vector<TsiRecord> read_tsi_records(std::istream& in)
{
    const auto table = detail::read_csv(in, "lambda_s_nm,lambda_i_nm,counts");
    std::vector<TsiRecord> records;
    records.reserve(table.rows.size());
    for (const auto& r : table.rows)
        records.push_back({r[0] * 1e-9, r[1] * 1e-9, r[2]});
    return records;
}

inline void write_tsi(std::ostream& out, const TsiGrid& tsi)
{
    out << "lambda_s_nm,lambda_i_nm,counts\n";
    for (std::size_t s = 0; s < tsi.rows(); ++s) {
        const std::string ls = format_scaled(tsi.lambda_s().at(s) * 1e9);
        for (std::size_t i = 0; i < tsi.cols(); ++i)
            out << ls << ',' << format_scaled(tsi.lambda_i().at(i) * 1e9) << ',' << format_number(tsi(s, i)) << '\n';
    }
}

inline void write_profile(std::ostream& out, const TsiProfile& p)
{
    out << "# axis=" << to_string(p.axis) << '\n';
    out << "coordinate_nm,counts\n";
    for (std::size_t k = 0; k < p.values.size(); ++k) {
        const double x = p.coordinate(k);
        out << format_scaled(std::abs(x) < 1e-6 * p.step ? 0.0 : x * 1e9) << ',' << format_number(p.values[k]) << '\n';
    }
}

// ---------------------------------------------------------------------------
// Run configuration

enum class SourceKind
{
    gvm_jsa,
    separable,
    gaussian_spectrum,
};

/// Flat key = value configuration, in file units (nm, fs, mm, THz).
struct RunConfig
{
    int defaults_version = defaults::kVersion;

    SourceKind source = SourceKind::gvm_jsa;
    double pump_wavelength_nm = defaults::kPumpWavelength * 1e9;
    double pump_duration_fs = defaults::kPumpDuration * 1e15;
    double crystal_length_mm = defaults::kCrystalLength * 1e3;
    double group_delay_signal_fs_per_mm = 0.5 * defaults::kGroupDelayMismatch * 1e12;
    double group_delay_idler_fs_per_mm = -0.5 * defaults::kGroupDelayMismatch * 1e12;
    ProfileShape plus_profile = ProfileShape::sinc2;
    double plus_fwhm_thz = defaults::kPlusFwhm * 1e-12;
    ProfileShape minus_profile = ProfileShape::gaussian;
    double minus_fwhm_thz = defaults::kMinusFwhm * 1e-12;
    double spectrum_fwhm_thz = defaults::kSpectrumFwhm * 1e-12;
    double spectrum_center_nm = defaults::kSpectrumCenterWavelength * 1e9;

    double freq_step_thz = defaults::kFrequencyStep * 1e-12;
    std::size_t freq_count = defaults::kFrequencyCount;
    double mzi_delay_step_fs = defaults::kMziDelayStep * 1e15;
    std::size_t mzi_delay_count = defaults::kMziDelayCount;
    double homi_delay_step_fs = defaults::kHomiDelayStep * 1e15;
    std::size_t homi_delay_count = defaults::kHomiDelayCount;
    double nooni_delay_step_fs = defaults::kNooniDelayStep * 1e15;
    std::size_t nooni_delay_count = defaults::kNooniDelayCount;

    double visibility = 1.0;
    Units units = Units::probability;
    double peak_counts = 1e4;
    NoiseModel noise = NoiseModel::none;
    std::uint64_t seed = 0;

    std::size_t padding_factor = 16;
    bool hann_window = false;
    double edge_tolerance = 1e-3;
    double symmetry_tolerance = 1e-6;
    double realness_tolerance = 1e-9;

    double tolerance = 0.02;
    double shape_tolerance = 0.01;

    double tsi_center_nm = defaults::kTsiCenterWavelength * 1e9;
    bool subtract_background = false;

    // Derived SI quantities.
    PumpSpec pump() const { return {pump_wavelength_nm * 1e-9, pump_duration_fs * 1e-15}; }
    PhaseMatchSpec phase_match() const
    {
        return {crystal_length_mm * 1e-3, group_delay_signal_fs_per_mm * 1e-12, group_delay_idler_fs_per_mm * 1e-12};
    }
    /// Degenerate frequency of the two-photon sources, or the one-photon centre.
    double center_frequency() const
    {
        if (source == SourceKind::gaussian_spectrum)
            return kTwoPi * kSpeedOfLight / (spectrum_center_nm * 1e-9);
        return kPi * kSpeedOfLight / (pump_wavelength_nm * 1e-9);
    }
    FrequencyGrid frequency_grid() const
    {
        return FrequencyGrid::centered(center_frequency(), thz_to_angular(freq_step_thz), freq_count);
    }
    DelayGrid delays(InterferenceKind kind) const
    {
        switch (kind) {
        case InterferenceKind::mzi: return DelayGrid::symmetric(mzi_delay_step_fs * 1e-15, mzi_delay_count);
        case InterferenceKind::homi: return DelayGrid::symmetric(homi_delay_step_fs * 1e-15, homi_delay_count);
        case InterferenceKind::nooni: return DelayGrid::symmetric(nooni_delay_step_fs * 1e-15, nooni_delay_count);
        case InterferenceKind::unknown: break;
        }
        fail(ErrorCode::UnknownKind, "interferogram kind is not set");
    }
    SymmetryTolerance symmetry() const { return {symmetry_tolerance, realness_tolerance}; }
    /// Carrier expected on the kind's spectral axis (rad/s); none for HOM.
    std::optional<double> expected_carrier(InterferenceKind kind) const
    {
        if (kind == InterferenceKind::mzi)
            return center_frequency();
        if (kind == InterferenceKind::nooni)
            return kTwoPi * kSpeedOfLight / (pump_wavelength_nm * 1e-9);
        return std::nullopt;
    }
    ExtractOptions extract_options(InterferenceKind kind) const
    {
        ExtractOptions o;
        o.padding_factor = padding_factor;
        o.hann_window = hann_window;
        o.edge_tolerance = edge_tolerance;
        o.expected_carrier = expected_carrier(kind);
        return o;
    }

    void validate() const
    {
        auto positive = [](double v, const char* key) {
            if (!(v > 0.0) || !std::isfinite(v))
                fail(ErrorCode::ConfigError, std::string(key) + " must be positive");
        };
        auto at_least = [](std::size_t v, std::size_t lo, const char* key) {
            if (v < lo)
                fail(ErrorCode::ConfigError, std::string(key) + " must be at least " + std::to_string(lo));
        };
        if (defaults_version != defaults::kVersion)
            fail(ErrorCode::ConfigError, "defaults_version " + std::to_string(defaults_version)
                                             + " does not match built-in version "
                                             + std::to_string(defaults::kVersion));
        positive(pump_wavelength_nm, "pump_wavelength_nm");
        positive(pump_duration_fs, "pump_duration_fs");
        positive(crystal_length_mm, "crystal_length_mm");
        if (!std::isfinite(group_delay_signal_fs_per_mm) || !std::isfinite(group_delay_idler_fs_per_mm))
            fail(ErrorCode::ConfigError, "group delays must be finite");
        positive(plus_fwhm_thz, "plus_fwhm_thz");
        positive(minus_fwhm_thz, "minus_fwhm_thz");
        positive(spectrum_fwhm_thz, "spectrum_fwhm_thz");
        positive(spectrum_center_nm, "spectrum_center_nm");
        positive(freq_step_thz, "freq_step_thz");
        at_least(freq_count, 2, "freq_count");
        positive(mzi_delay_step_fs, "mzi_delay_step_fs");
        positive(homi_delay_step_fs, "homi_delay_step_fs");
        positive(nooni_delay_step_fs, "nooni_delay_step_fs");
        at_least(mzi_delay_count, 16, "mzi_delay_count");
        at_least(homi_delay_count, 16, "homi_delay_count");
        at_least(nooni_delay_count, 16, "nooni_delay_count");
        if (!(visibility >= 0.0 && visibility <= 1.0))
            fail(ErrorCode::ConfigError, "visibility must lie in [0, 1]");
        positive(peak_counts, "peak_counts");
        at_least(padding_factor, 1, "padding_factor");
        positive(edge_tolerance, "edge_tolerance");
        positive(symmetry_tolerance, "symmetry_tolerance");
        positive(realness_tolerance, "realness_tolerance");
        if (!(tolerance >= 0.0) || !(shape_tolerance >= 0.0))
            fail(ErrorCode::ConfigError, "tolerances must be nonnegative");
        positive(tsi_center_nm, "tsi_center_nm");
    }

    bool operator==(const RunConfig&) const = default;
};

namespace detail
{

template<typename Enum>
Enum parse_choice(std::string_view value, std::initializer_list<std::pair<std::string_view, Enum>> choices,
                  std::string_view key)
{
    for (const auto& [name, e] : choices) {
        if (value == name)
            return e;
    }
    fail(ErrorCode::ConfigError, "invalid value '" + std::string(value) + "' for " + std::string(key));
}

inline bool parse_bool(std::string_view value, std::string_view key)
{
    return parse_choice<bool>(value, {{"true", true}, {"false", false}}, key);
}

inline void assign(RunConfig& c, std::string_view key, std::string_view value)
{
    auto number = [&] {
        try {
            return parse_number(value);
        } catch (const Error&) {
            fail(ErrorCode::ConfigError, "invalid number '" + std::string(value) + "' for " + std::string(key));
        }
    };
    auto count = [&] {
        try {
            return parse_count(value);
        } catch (const Error&) {
            fail(ErrorCode::ConfigError, "invalid count '" + std::string(value) + "' for " + std::string(key));
        }
    };
    auto profile = [&] {
        return parse_choice<ProfileShape>(value, {{"gaussian", ProfileShape::gaussian}, {"sinc2", ProfileShape::sinc2}},
                                          key);
    };

    if (key == "defaults_version")
        c.defaults_version = static_cast<int>(count());
    else if (key == "source")
        c.source = parse_choice<SourceKind>(value,
                                            {{"gvm_jsa", SourceKind::gvm_jsa},
                                             {"separable", SourceKind::separable},
                                             {"gaussian_spectrum", SourceKind::gaussian_spectrum}},
                                            key);
    else if (key == "pump_wavelength_nm")
        c.pump_wavelength_nm = number();
    else if (key == "pump_duration_fs")
        c.pump_duration_fs = number();
    else if (key == "crystal_length_mm")
        c.crystal_length_mm = number();
    else if (key == "group_delay_signal_fs_per_mm")
        c.group_delay_signal_fs_per_mm = number();
    else if (key == "group_delay_idler_fs_per_mm")
        c.group_delay_idler_fs_per_mm = number();
    else if (key == "plus_profile")
        c.plus_profile = profile();
    else if (key == "plus_fwhm_thz")
        c.plus_fwhm_thz = number();
    else if (key == "minus_profile")
        c.minus_profile = profile();
    else if (key == "minus_fwhm_thz")
        c.minus_fwhm_thz = number();
    else if (key == "spectrum_fwhm_thz")
        c.spectrum_fwhm_thz = number();
    else if (key == "spectrum_center_nm")
        c.spectrum_center_nm = number();
    else if (key == "freq_step_thz")
        c.freq_step_thz = number();
    else if (key == "freq_count")
        c.freq_count = count();
    else if (key == "mzi_delay_step_fs")
        c.mzi_delay_step_fs = number();
    else if (key == "mzi_delay_count")
        c.mzi_delay_count = count();
    else if (key == "homi_delay_step_fs")
        c.homi_delay_step_fs = number();
    else if (key == "homi_delay_count")
        c.homi_delay_count = count();
    else if (key == "nooni_delay_step_fs")
        c.nooni_delay_step_fs = number();
    else if (key == "nooni_delay_count")
        c.nooni_delay_count = count();
    else if (key == "visibility")
        c.visibility = number();
    else if (key == "units") {
        try {
            c.units = parse_units(value);
        } catch (const Error&) {
            fail(ErrorCode::ConfigError, "invalid value '" + std::string(value) + "' for units");
        }
    } else if (key == "peak_counts")
        c.peak_counts = number();
    else if (key == "noise")
        c.noise = parse_choice<NoiseModel>(value, {{"none", NoiseModel::none}, {"poisson", NoiseModel::poisson}}, key);
    else if (key == "seed")
        c.seed = count();
    else if (key == "padding_factor")
        c.padding_factor = count();
    else if (key == "apodization")
        c.hann_window = parse_choice<bool>(value, {{"none", false}, {"hann", true}}, key);
    else if (key == "edge_tolerance")
        c.edge_tolerance = number();
    else if (key == "symmetry_tolerance")
        c.symmetry_tolerance = number();
    else if (key == "realness_tolerance")
        c.realness_tolerance = number();
    else if (key == "tolerance")
        c.tolerance = number();
    else if (key == "shape_tolerance")
        c.shape_tolerance = number();
    else if (key == "tsi_center_nm")
        c.tsi_center_nm = number();
    else if (key == "subtract_background")
        c.subtract_background = parse_bool(value, key);
    else
        fail(ErrorCode::ConfigError, "unknown key '" + std::string(key) + "'");
}

} // namespace detail

/// Parses `key = value` lines; '#' starts a comment.  Unknown or repeated
/// keys are errors, and the result is validated before it is returned.
inline RunConfig parse_config(std::istream& in)
{
    RunConfig c;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos)
            view = view.substr(0, hash);
        view = trim(view);
        if (view.empty())
            continue;
        const auto eq = view.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(view.substr(0, eq));
        const auto value = trim(view.substr(eq + 1));
        if (!seen.emplace(std::string(key), line_no).second)
            fail(ErrorCode::ConfigError, "line " + std::to_string(line_no) + ": repeated key '" + std::string(key) + "'");
        detail::assign(c, key, value);
    }
    c.validate();
    return c;
}

inline RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::IoError, "cannot open config '" + path + "'");
    return parse_config(in);
}

} // namespace bwkt
