#pragma once
//
// Non-linear traces on positive semidefinite matrices: the Choquet type
// sum_i c_i lambda_i(a) and the Sugeno type max_i min(lambda_i(a), alpha(i)).
//

#include <cstddef>
#include <span>

#include "nlt/matrix.hpp"
#include "nlt/spectral.hpp"
#include "nlt/weights.hpp"

namespace nlt {

inline constexpr double kDualFormTolerance = 1e-10;

// Formulas on a non-increasing, non-negative eigenvalue list (zero beyond its end).
double choquet_sum_form(std::span<const double> lambda, const WeightFunction& w);
double choquet_difference_form(std::span<const double> lambda, const WeightFunction& w);
double sugeno_max_min(std::span<const double> lambda, const WeightFunction& w);

// Both Choquet forms are evaluated; a disagreement beyond 1e-10 (scaled by the
// magnitude when it exceeds 1) throws Errc::Internal.
double choquet_trace(const HermitianMatrix& a, const WeightFunction& w);
double choquet_trace(const EigenSequence& e, const WeightFunction& w);
double sugeno_trace(const HermitianMatrix& a, const WeightFunction& w);
double sugeno_trace(const EigenSequence& e, const WeightFunction& w);

// a = a1 - a2 + i (a3 - a4) and the trace applied part by part
cplx choquet_trace_extended(const ComplexMatrix& a, const WeightFunction& w);
cplx sugeno_trace_extended(const ComplexMatrix& a, const WeightFunction& w);

// max over top-n spectral projections p of the largest lambda with pap >= lambda p
// and lambda <= alpha(dim p)
double sugeno_max_oracle(const HermitianMatrix& a, const WeightFunction& w);

enum class ObservationCase : char {
    TopAboveLower = 'a',   // lambda_1 >= alpha(1), lambda_n >= alpha(n-1)
    TopBelowLower = 'b',   // lambda_1 >= alpha(1), lambda_n < alpha(n-1)
    BelowFirst = 'c',      // lambda_1 < alpha(1)
};

struct ObservationProjections {
    ComplexMatrix p;
    ComplexMatrix q0;
    std::size_t rank_p = 0;
    std::size_t rank_q0 = 0;
    std::size_t crossing = 0;   // first n with lambda_n < alpha(n); 1 in the BelowFirst case
    ObservationCase which = ObservationCase::BelowFirst;
    double value = 0.0;         // sugeno trace of a
};

// p, q0 spectral projections with pap >= psi p, psi <= alpha(rank p),
// (I-q0) a (I-q0) <= psi (I-q0), alpha(rank q0) <= psi.
ObservationProjections observation_projections(const HermitianMatrix& a, const WeightFunction& w);

}  // namespace nlt
