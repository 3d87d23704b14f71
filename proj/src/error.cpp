#include "nlt/error.hpp"

namespace nlt {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NotSquare: return "NotSquare";
        case Errc::NotPositive: return "NotPositive";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::SpectrumMismatch: return "SpectrumMismatch";
        case Errc::InvalidWeight: return "InvalidWeight";
        case Errc::InvalidMeasure: return "InvalidMeasure";
        case Errc::InvalidVector: return "InvalidVector";
        case Errc::GroundTooLarge: return "GroundTooLarge";
        case Errc::AlphaOneZero: return "AlphaOneZero";
        case Errc::InvalidExponent: return "InvalidExponent";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::NotConcave: return "NotConcave";
        case Errc::NotDominated: return "NotDominated";
        case Errc::ConcaveWeight: return "ConcaveWeight";
        case Errc::SearchExhausted: return "SearchExhausted";
        case Errc::BadSpectrum: return "BadSpectrum";
        case Errc::DimensionTooSmall: return "DimensionTooSmall";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownSuite: return "UnknownSuite";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

bool is_math_domain(Errc code) noexcept {
    switch (code) {
        case Errc::ParseError:
        case Errc::UnknownSuite:
        case Errc::InvalidVector:
            return false;
        default:
            return true;
    }
}

}  // namespace nlt
