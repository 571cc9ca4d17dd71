#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace biquad90 {

// Every domain failure in the library is reported as an Error with one of
// these kinds.  ParseError is the only kind a CLI maps to a usage exit code;
// everything else is a domain error.
enum class ErrorKind {
    DivisionByZero,
    ZeroElement,
    ZeroInput,
    ZeroValue,
    MixedConfig,
    NotBiquadratic,
    NotInSubfield,
    NotNormOne,
    NormNotOne,
    CompatibilityFailed,
    NotInKernel,
    ValueNotInF,
    InvalidModule,
    TooLarge,
    InvalidArgument,
    ParseError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero:      return "DivisionByZero";
        case ErrorKind::ZeroElement:         return "ZeroElement";
        case ErrorKind::ZeroInput:           return "ZeroInput";
        case ErrorKind::ZeroValue:           return "ZeroValue";
        case ErrorKind::MixedConfig:         return "MixedConfig";
        case ErrorKind::NotBiquadratic:      return "NotBiquadratic";
        case ErrorKind::NotInSubfield:       return "NotInSubfield";
        case ErrorKind::NotNormOne:          return "NotNormOne";
        case ErrorKind::NormNotOne:          return "NormNotOne";
        case ErrorKind::CompatibilityFailed: return "CompatibilityFailed";
        case ErrorKind::NotInKernel:         return "NotInKernel";
        case ErrorKind::ValueNotInF:         return "ValueNotInF";
        case ErrorKind::InvalidModule:       return "InvalidModule";
        case ErrorKind::TooLarge:            return "TooLarge";
        case ErrorKind::InvalidArgument:     return "InvalidArgument";
        case ErrorKind::ParseError:          return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    // detail is kind-specific: which parameter failed for NotBiquadratic
    // (1 = a1, 2 = a2, 3 = a1*a2), the subextension index for NormNotOne /
    // NotNormOne, the byte offset for ParseError.
    Error(ErrorKind kind, const std::string& message, long detail)
        : std::runtime_error(message), kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<long>& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::optional<long> detail_;
};

}  // namespace biquad90
