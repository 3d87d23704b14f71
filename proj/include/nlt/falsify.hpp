#pragma once
//
// Random generators for the property suites, and the counterexample search for
// the triangle inequality of |||.|||_{alpha,p} when alpha is not concave.
//

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nlt/matrix.hpp"
#include "nlt/random.hpp"
#include "nlt/spectral.hpp"
#include "nlt/weights.hpp"

namespace nlt {

inline constexpr double kViolationMargin = 1e-9;
inline constexpr std::size_t kGridS = 64;
inline constexpr std::size_t kGridT = 64;

// u diag(spectrum) u*, spectrum defaulting to |Gaussian| draws; BadSpectrum on bad input
HermitianMatrix random_psd(RandomSource& rng, std::size_t dim,
                           std::optional<std::vector<double>> spectrum = std::nullopt);

// concave: positive non-increasing increments, tail no larger than the last.
// otherwise: at least one step up by 0.05 or more somewhere in c_1..c_len, tail.
WeightFunction random_weight(RandomSource& rng, std::size_t len, bool concave);

// dim distinct values in [0.1, 10.1) that stay at least 1e-3 apart
std::vector<double> random_distinct_spectrum(RandomSource& rng, std::size_t dim);

// f, g on {0} and the given points, non-decreasing along one shared random order
// of the points that starts at 0, so f(0) = g(0) = 0 and f, g are comonotone
std::pair<SpectrumFunction, SpectrumFunction> random_comonotone_pair(RandomSource& rng,
                                                                     std::vector<double> points);

struct Counterexample {
    ComplexMatrix a;
    ComplexMatrix b;
    WeightFunction weight;
    double p = 1.0;
    double lhs = 0.0;   // |||a + b|||
    double rhs = 0.0;   // |||a||| + |||b|||
    double margin = 0.0;
};

// recomputes lhs and rhs from the matrices
bool verify_counterexample(const Counterexample& c);

// a = 2 P_i + (1+s) p_{i+1} + (1-t) p_{i+2}, b with the last two swapped.
// Tries s = 0, t = 1 first, then a 64 x 64 grid (s log-spaced in (0, s0], t linear in [0, 1]).
Counterexample proof_family_counterexample(const WeightFunction& w, double p, std::size_t dim);

// even trials: diagonal non-negative pairs, odd trials: complex Gaussian pairs.
// Trial i draws from rng.fork(i); the lowest violating trial wins.
std::optional<Counterexample> random_search_counterexample(const WeightFunction& w, double p,
                                                           std::size_t dim, std::size_t trials,
                                                           const RandomSource& rng);

}  // namespace nlt
