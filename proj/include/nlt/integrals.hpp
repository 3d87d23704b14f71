#pragma once
//
// Discrete Choquet and Sugeno integrals of non-negative vectors.
//

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nlt/weights.hpp"

namespace nlt {

class NonNegVector {
public:
    NonNegVector() = default;
    explicit NonNegVector(std::vector<double> entries);
    NonNegVector(std::initializer_list<double> entries) : NonNegVector(std::vector<double>(entries)) {}

    std::size_t size() const noexcept { return entries_.size(); }
    double operator[](std::size_t i) const { return entries_[i]; }
    std::span<const double> entries() const noexcept { return entries_; }

    friend bool operator==(const NonNegVector&, const NonNegVector&) = default;

private:
    std::vector<double> entries_;
};

NonNegVector decreasing_rearrangement(const NonNegVector& x);

// sigma with x[sigma[0]] >= x[sigma[1]] >= ...; ties keep ascending index
std::vector<std::size_t> decreasing_order(std::span<const double> x);

double choquet_integral(const NonNegVector& x, const MonotoneMeasure& m);
double sugeno_integral(const NonNegVector& x, const MonotoneMeasure& m);

bool are_comonotonic(const NonNegVector& f, const NonNegVector& g);

}  // namespace nlt
