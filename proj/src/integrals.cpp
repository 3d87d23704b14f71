#include "nlt/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "nlt/error.hpp"

namespace nlt {

NonNegVector::NonNegVector(std::vector<double> entries) : entries_(std::move(entries)) {
    for (double x : entries_) {
        if (!std::isfinite(x) || x < 0.0)
            throw Error(Errc::InvalidVector, "entries must be finite and non-negative");
    }
}

std::vector<std::size_t> decreasing_order(std::span<const double> x) {
    std::vector<std::size_t> sigma(x.size());
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::stable_sort(sigma.begin(), sigma.end(),
                     [&](std::size_t l, std::size_t r) { return x[l] > x[r]; });
    return sigma;
}

NonNegVector decreasing_rearrangement(const NonNegVector& x) {
    std::vector<double> v(x.entries().begin(), x.entries().end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return NonNegVector(std::move(v));
}

namespace {

void require_ground(const NonNegVector& x, const MonotoneMeasure& m) {
    if (x.size() != m.ground_size())
        throw Error(Errc::DimensionMismatch, "vector length differs from the measure's ground size");
}

// mu(A_1), ..., mu(A_n) along the decreasing order
std::vector<double> chain_measures(const std::vector<std::size_t>& sigma, const MonotoneMeasure& m) {
    std::vector<double> mu(sigma.size());
    if (m.is_cardinality_based()) {
        for (std::size_t i = 0; i < sigma.size(); ++i) mu[i] = m.value(std::span(sigma.data(), i + 1));
        return mu;
    }
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        mask |= std::uint64_t{1} << sigma[i];
        mu[i] = m.value(mask);
    }
    return mu;
}

}  // namespace

double choquet_integral(const NonNegVector& x, const MonotoneMeasure& m) {
    require_ground(x, m);
    const std::size_t n = x.size();
    const auto sigma = decreasing_order(x.entries());
    const auto mu = chain_measures(sigma, m);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += (x[sigma[i]] - x[sigma[i + 1]]) * mu[i];
    if (n > 0) sum += x[sigma[n - 1]] * mu[n - 1];
    return sum;
}

double sugeno_integral(const NonNegVector& x, const MonotoneMeasure& m) {
    require_ground(x, m);
    const auto sigma = decreasing_order(x.entries());
    const auto mu = chain_measures(sigma, m);
    double best = 0.0;
    for (std::size_t i = 0; i < sigma.size(); ++i) best = std::max(best, std::min(x[sigma[i]], mu[i]));
    return best;
}

bool are_comonotonic(const NonNegVector& f, const NonNegVector& g) {
    if (f.size() != g.size()) throw Error(Errc::DimensionMismatch, "comonotonicity needs equal lengths");
    for (std::size_t s = 0; s < f.size(); ++s) {
        for (std::size_t t = s + 1; t < f.size(); ++t) {
            if ((f[s] - f[t]) * (g[s] - g[t]) < 0.0) return false;
        }
    }
    return true;
}

}  // namespace nlt
