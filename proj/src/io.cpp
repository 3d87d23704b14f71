#include "nlt/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nlt/error.hpp"

namespace nlt {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

json parse_json(std::string_view text) {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded()) fail("not valid JSON");
    if (!j.is_object()) fail("expected a JSON object");
    return j;
}

double number(const json& v, const char* what) {
    if (!v.is_number()) fail(std::string(what) + " must be a number");
    return v.get<double>();
}

std::size_t count(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0)
        fail(std::string("\"") + key + "\" must be a non-negative integer");
    return j[key].get<std::size_t>();
}

double parse_decimal(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        fail("bad number '" + std::string(s) + "'");
    return v;
}

}  // namespace

WeightFunction parse_weight(std::string_view text) {
    const json j = parse_json(text);
    if (!j.contains("increments") || !j["increments"].is_array()) fail("weight needs an \"increments\" array");
    std::vector<double> c;
    for (const auto& v : j["increments"]) c.push_back(number(v, "increment"));
    const double tail = j.contains("tail") ? number(j["tail"], "tail") : 0.0;
    return WeightFunction(std::move(c), tail);
}

MonotoneMeasure parse_measure(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t n = count(j, "n");
    if (n > kTableGroundCap) fail("measure ground set larger than " + std::to_string(kTableGroundCap));
    if (!j.contains("values") || !j["values"].is_object()) fail("measure needs a \"values\" object");
    const std::uint64_t full = std::uint64_t{1} << n;
    std::vector<double> table(full, 0.0);
    std::vector<bool> seen(full, false);
    for (const auto& [key, value] : j["values"].items()) {
        std::uint64_t mask = 0;
        std::string_view rest = key;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const std::string_view tok = rest.substr(0, comma);
            const double idx = parse_decimal(tok);
            if (idx != std::floor(idx) || idx < 1 || idx > static_cast<double>(n))
                fail("subset index out of range in '" + key + "'");
            mask |= std::uint64_t{1} << (static_cast<std::size_t>(idx) - 1);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        table[mask] = number(value, "measure value");
        seen[mask] = true;
    }
    for (std::uint64_t m = 1; m < full; ++m)
        if (!seen[m]) fail("measure table misses a subset (" + std::to_string(full - 1) + " non-empty subsets needed)");
    return MonotoneMeasure::from_table(n, std::move(table));
}

ComplexMatrix parse_matrix(std::string_view text) {
    const json j = parse_json(text);
    const std::size_t n = count(j, "n");
    if (n == 0) fail("matrix dimension must be positive");
    if (n > kMaxFileDim) fail("matrix dimension above " + std::to_string(kMaxFileDim));
    const bool complex = j.value("complex", false);
    if (!j.contains("data") || !j["data"].is_array()) fail("matrix needs a \"data\" array");
    const json& data = j["data"];
    if (data.size() != n * n) fail("matrix data needs n*n = " + std::to_string(n * n) + " entries");
    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (const auto& e : data) {
        if (complex) {
            if (!e.is_array() || e.size() != 2) fail("complex entries are [re, im] pairs");
            entries.emplace_back(number(e[0], "entry"), number(e[1], "entry"));
        } else {
            entries.emplace_back(number(e, "entry"), 0.0);
        }
    }
    return ComplexMatrix(n, n, std::move(entries));
}

NonNegVector parse_vector(std::string_view text) {
    std::vector<double> out;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(parse_decimal(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return NonNegVector(std::move(out));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightFunction load_weight(const std::filesystem::path& path) { return parse_weight(read_text_file(path)); }
MonotoneMeasure load_measure(const std::filesystem::path& path) { return parse_measure(read_text_file(path)); }
ComplexMatrix load_matrix(const std::filesystem::path& path) { return parse_matrix(read_text_file(path)); }

std::string format_weight(const WeightFunction& w) {
    json j;
    j["increments"] = std::vector<double>(w.increments().begin(), w.increments().end());
    j["tail"] = w.tail();
    return j.dump();
}

std::string format_matrix(const ComplexMatrix& m) {
    json j;
    j["n"] = m.rows();
    j["complex"] = true;
    json data = json::array();
    for (const cplx& z : m.data()) data.push_back({z.real(), z.imag()});
    j["data"] = std::move(data);
    return j.dump();
}

}  // namespace nlt
