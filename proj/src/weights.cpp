#include "nlt/weights.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <string>

#include "nlt/error.hpp"

namespace nlt {

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "unknown";
}

namespace {

void require_increment(double c) {
    if (!std::isfinite(c) || c < 0.0)
        throw Error(Errc::InvalidWeight, "increments must be finite and non-negative");
}

std::string format_subset(std::uint64_t mask, std::size_t n) {
    std::string out = "{";
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
        if ((mask >> k) & 1u) {
            if (!first) out += ",";
            out += std::to_string(k + 1);
            first = false;
        }
    }
    return out + "}";
}

}  // namespace

WeightFunction::WeightFunction(std::vector<double> increments, double tail)
    : increments_(std::move(increments)), tail_(tail) {
    for (double c : increments_) require_increment(c);
    require_increment(tail_);
}

WeightFunction WeightFunction::linear() { return WeightFunction({1.0}, 1.0); }

WeightFunction WeightFunction::top_k(std::size_t k) {
    return WeightFunction(std::vector<double>(k, 1.0), 0.0);
}

WeightFunction WeightFunction::selector(std::size_t i) {
    if (i == 0) throw Error(Errc::IndexOutOfRange, "selector index is 1-based");
    std::vector<double> c(i, 0.0);
    c.back() = 1.0;
    return WeightFunction(std::move(c), 0.0);
}

WeightFunction WeightFunction::constant(double r) { return WeightFunction({r}, 0.0); }

double WeightFunction::increment(std::size_t i) const {
    if (i == 0) throw Error(Errc::IndexOutOfRange, "increments are 1-based");
    return i <= increments_.size() ? increments_[i - 1] : tail_;
}

std::vector<double> WeightFunction::increments_upto(std::size_t n) const {
    std::vector<double> c(n);
    for (std::size_t i = 1; i <= n; ++i) c[i - 1] = increment(i);
    return c;
}

double WeightFunction::value(std::size_t n) const {
    double sum = 0.0;
    const std::size_t stored = std::min(n, increments_.size());
    for (std::size_t i = 0; i < stored; ++i) sum += increments_[i];
    if (n > stored) sum += static_cast<double>(n - stored) * tail_;
    return sum;
}

double weight_value(const WeightFunction& w, std::size_t n) { return w.value(n); }

bool is_concave(const WeightFunction& w) { return !first_nonconcave_index(w).has_value(); }

std::optional<std::size_t> first_nonconcave_index(const WeightFunction& w) {
    // beyond N+1 the increments are constant, so c_{N+1} is the last one to compare
    const std::size_t last = w.increments().size() + 1;
    for (std::size_t j = 1; j < last; ++j) {
        if (w.increment(j + 1) > w.increment(j)) return j - 1;
    }
    return std::nullopt;
}

double measure_of(const WeightFunction& w, std::size_t subset_size) { return w.value(subset_size); }

MonotoneMeasure MonotoneMeasure::from_table(std::size_t ground_size, std::vector<double> values) {
    if (ground_size == 0) throw Error(Errc::InvalidMeasure, "ground set must be non-empty");
    if (ground_size > kTableGroundCap)
        throw Error(Errc::GroundTooLarge, "explicit tables are limited to ground size 20");
    if (values.size() != (std::size_t{1} << ground_size))
        throw Error(Errc::InvalidMeasure, "table must hold 2^n values");
    for (double v : values) {
        if (!std::isfinite(v) || v < 0.0)
            throw Error(Errc::InvalidMeasure, "measure values must be finite and non-negative");
    }
    return MonotoneMeasure(ground_size, std::move(values));
}

MonotoneMeasure MonotoneMeasure::cardinality_based(std::size_t ground_size, WeightFunction w) {
    if (ground_size == 0) throw Error(Errc::InvalidMeasure, "ground set must be non-empty");
    return MonotoneMeasure(ground_size, std::move(w));
}

std::span<const double> MonotoneMeasure::table() const {
    if (const auto* t = std::get_if<std::vector<double>>(&rule_)) return *t;
    return {};
}

double MonotoneMeasure::value(std::uint64_t mask) const {
    if (const auto* w = weight()) return w->value(static_cast<std::size_t>(std::popcount(mask)));
    const auto& t = std::get<std::vector<double>>(rule_);
    if (mask >= t.size()) throw Error(Errc::IndexOutOfRange, "subset outside the ground set");
    return t[mask];
}

double MonotoneMeasure::value(std::span<const std::size_t> members) const {
    if (const auto* w = weight()) return w->value(members.size());
    std::uint64_t mask = 0;
    for (std::size_t k : members) {
        if (k >= ground_size_) throw Error(Errc::IndexOutOfRange, "subset outside the ground set");
        mask |= std::uint64_t{1} << k;
    }
    return value(mask);
}

CheckReport check_measure_monotone(const MonotoneMeasure& m) {
    CheckReport report;
    report.name = "measure-monotone";
    const std::size_t n = m.ground_size();

    if (const auto* w = m.weight()) {
        // rule-based: alpha(k) <= alpha(k+1) on 0..n
        report.trials = n;
        for (std::size_t k = 0; k < n; ++k) {
            if (w->value(k) > w->value(k + 1)) {
                report.verdict = Verdict::Fail;
                report.failures = 1;
                report.witness = "alpha(" + std::to_string(k) + ") > alpha(" + std::to_string(k + 1) + ")";
                return report;
            }
        }
        return report;
    }

    if (n > kExhaustiveGroundCap)
        throw Error(Errc::GroundTooLarge, "exhaustive monotonicity check is capped at ground size 12");

    if (m.value(std::uint64_t{0}) != 0.0) {
        report.verdict = Verdict::Fail;
        report.failures = 1;
        report.witness = "mu({}) != 0";
        return report;
    }
    // covering pairs A, A + {k} suffice: inclusion chains are built from them
    const std::uint64_t full = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < full; ++a) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << k;
            if (a & bit) continue;
            ++report.trials;
            if (m.value(a) > m.value(a | bit)) {
                std::ostringstream os;
                os << "mu(" << format_subset(a, n) << ")=" << m.value(a) << " > mu("
                   << format_subset(a | bit, n) << ")=" << m.value(a | bit);
                report.verdict = Verdict::Fail;
                report.failures = 1;
                report.witness = os.str();
                return report;
            }
        }
    }
    return report;
}

}  // namespace nlt
