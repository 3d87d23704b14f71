#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nlt {

enum class Verdict { Pass, Fail, Skipped };

std::string_view verdict_name(Verdict v) noexcept;

// Outcome of one property check or falsifier run.
struct CheckReport {
    std::string name;
    Verdict verdict = Verdict::Pass;
    double tolerance = 0.0;
    std::string witness;  // empty unless something needs explaining
    std::optional<std::uint64_t> seed;
    std::size_t trials = 0;
    std::size_t failures = 0;

    bool passed() const noexcept { return verdict != Verdict::Fail; }
};

}  // namespace nlt
