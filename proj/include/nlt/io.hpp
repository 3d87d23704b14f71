#pragma once
//
// Text formats.
//   weight:  {"increments": [c1, ..., cN], "tail": c}
//   measure: {"n": k, "values": {"1,2": v, "": 0, ...}}   (1-based sorted indices)
//   matrix:  {"n": k, "complex": bool, "data": [...]}     (row-major; [re, im] pairs when complex)
// All parse failures throw Errc::ParseError.
//

#include <filesystem>
#include <string>
#include <string_view>

#include "nlt/integrals.hpp"
#include "nlt/matrix.hpp"
#include "nlt/weights.hpp"

namespace nlt {

inline constexpr std::size_t kMaxFileDim = 256;

WeightFunction parse_weight(std::string_view text);
MonotoneMeasure parse_measure(std::string_view text);
ComplexMatrix parse_matrix(std::string_view text);
// "1.5,0,2"
NonNegVector parse_vector(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

WeightFunction load_weight(const std::filesystem::path& path);
MonotoneMeasure load_measure(const std::filesystem::path& path);
ComplexMatrix load_matrix(const std::filesystem::path& path);

std::string format_weight(const WeightFunction& w);
std::string format_matrix(const ComplexMatrix& m);

}  // namespace nlt
