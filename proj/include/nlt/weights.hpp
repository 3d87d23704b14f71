#pragma once
//
// Weight functions alpha: N0 -> [0, inf) with alpha(0) = 0, stored as their
// increments c_i = alpha(i) - alpha(i-1), and the monotone measures they induce.
//

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "nlt/report.hpp"

namespace nlt {

class WeightFunction {
public:
    // increments c_1..c_N followed by a constant tail increment for every i > N
    WeightFunction(std::vector<double> increments, double tail);

    // alpha(n) = n (usual trace)
    static WeightFunction linear();
    // alpha(n) = min(n, k) (Ky Fan k / top-k sum)
    static WeightFunction top_k(std::size_t k);
    // alpha(n) = [n >= i] (picks the i-th eigenvalue)
    static WeightFunction selector(std::size_t i);
    // alpha(n) = r for n >= 1
    static WeightFunction constant(double r);

    std::span<const double> increments() const noexcept { return increments_; }
    double tail() const noexcept { return tail_; }

    // c_i, 1-based; c_0 is not defined and throws
    double increment(std::size_t i) const;
    // c_1..c_n
    std::vector<double> increments_upto(std::size_t n) const;

    // alpha(n)
    double value(std::size_t n) const;

private:
    std::vector<double> increments_;
    double tail_;
};

double weight_value(const WeightFunction& w, std::size_t n);

// non-increasing increments, including the step into the tail
bool is_concave(const WeightFunction& w);

// smallest i >= 0 with 2 alpha(i+1) < alpha(i) + alpha(i+2), i.e. c_{i+2} > c_{i+1}
std::optional<std::size_t> first_nonconcave_index(const WeightFunction& w);

// mu_alpha(A) = alpha(#A)
double measure_of(const WeightFunction& w, std::size_t subset_size);

inline constexpr std::size_t kExhaustiveGroundCap = 12;
inline constexpr std::size_t kTableGroundCap = 20;

// Monotone set function on {0,..,n-1}. Subsets are bit masks (bit k <-> element k).
class MonotoneMeasure {
public:
    // explicit table indexed by mask; values[0] is mu(empty)
    static MonotoneMeasure from_table(std::size_t ground_size, std::vector<double> values);
    static MonotoneMeasure cardinality_based(std::size_t ground_size, WeightFunction w);

    std::size_t ground_size() const noexcept { return ground_size_; }
    bool is_cardinality_based() const noexcept { return std::holds_alternative<WeightFunction>(rule_); }
    const WeightFunction* weight() const noexcept { return std::get_if<WeightFunction>(&rule_); }
    std::span<const double> table() const;

    double value(std::uint64_t mask) const;
    double value(std::span<const std::size_t> members) const;

private:
    MonotoneMeasure(std::size_t n, std::variant<std::vector<double>, WeightFunction> rule)
        : ground_size_(n), rule_(std::move(rule)) {}

    std::size_t ground_size_;
    std::variant<std::vector<double>, WeightFunction> rule_;
};

// mu(empty) = 0 and A subset B => mu(A) <= mu(B); exhaustive for tables (n <= 12)
CheckReport check_measure_monotone(const MonotoneMeasure& m);

}  // namespace nlt
