#pragma once
//
// Named randomized property suites. Trial i of a suite draws from seed + i.
//

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nlt/report.hpp"

namespace nlt {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::size_t dim = 4;
    std::optional<double> tolerance;   // replaces the default tolerance of every check
};

std::span<const std::string_view> suite_names();

// UnknownSuite for a name outside suite_names()
std::vector<CheckReport> run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace nlt
