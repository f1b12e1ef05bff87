#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bwkt
{

enum class ErrorCode
{
    InvalidArgument,
    ZeroSpectrum,
    GridMismatch,
    InvalidWavelength,
    GridTooNarrow,
    NotNormalized,
    AsymmetricJsa,
    ComplexJsa,
    NyquistViolation,
    UnknownKind,
    WindowTooShort,
    NonUniformGrid,
    TooFewSamples,
    NoCrossing,
    FitDiverged,
    IncompleteGrid,
    NonUniform,
    NegativeCount,
    NotSquare,
    ParseError,
    ConfigError,
    IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroSpectrum: return "ZeroSpectrum";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::InvalidWavelength: return "InvalidWavelength";
    case ErrorCode::GridTooNarrow: return "GridTooNarrow";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::AsymmetricJsa: return "AsymmetricJsa";
    case ErrorCode::ComplexJsa: return "ComplexJsa";
    case ErrorCode::NyquistViolation: return "NyquistViolation";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::NonUniformGrid: return "NonUniformGrid";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::FitDiverged: return "FitDiverged";
    case ErrorCode::IncompleteGrid: return "IncompleteGrid";
    case ErrorCode::NonUniform: return "NonUniform";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace bwkt
