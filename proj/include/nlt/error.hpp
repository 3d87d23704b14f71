#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nlt {

enum class Errc {
    DimensionMismatch,
    NotHermitian,
    NotSquare,
    NotPositive,
    NoConvergence,
    SpectrumMismatch,
    InvalidWeight,
    InvalidMeasure,
    InvalidVector,
    GroundTooLarge,
    AlphaOneZero,
    InvalidExponent,
    IndexOutOfRange,
    NotConcave,
    NotDominated,
    ConcaveWeight,
    SearchExhausted,
    BadSpectrum,
    DimensionTooSmall,
    ParseError,
    UnknownSuite,
    Internal,
};

std::string_view errc_name(Errc code) noexcept;

// Errors produced by numerical preconditions (as opposed to malformed input)
bool is_math_domain(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace nlt
