#include "nlt/traces.hpp"

#include <algorithm>
#include <cmath>

#include "nlt/error.hpp"

namespace nlt {

double choquet_sum_form(std::span<const double> lambda, const WeightFunction& w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) sum += lambda[i] * w.increment(i + 1);
    return sum;
}

double choquet_difference_form(std::span<const double> lambda, const WeightFunction& w) {
    const std::size_t n = lambda.size();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) sum += (lambda[i] - lambda[i + 1]) * w.value(i + 1);
    if (n > 0) sum += lambda[n - 1] * w.value(n);
    return sum;
}

double sugeno_max_min(std::span<const double> lambda, const WeightFunction& w) {
    double best = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) best = std::max(best, std::min(lambda[i], w.value(i + 1)));
    return best;
}

double choquet_trace(const EigenSequence& e, const WeightFunction& w) {
    const auto lambda = eigenvalue_sequence(e);
    const double sum = choquet_sum_form(lambda, w);
    const double diff = choquet_difference_form(lambda, w);
    if (std::abs(sum - diff) > kDualFormTolerance * std::max(1.0, std::abs(sum)))
        throw Error(Errc::Internal, "Choquet sum and difference forms disagree");
    return sum;
}

double choquet_trace(const HermitianMatrix& a, const WeightFunction& w) { return choquet_trace(eigh(a), w); }

double sugeno_trace(const EigenSequence& e, const WeightFunction& w) {
    return sugeno_max_min(eigenvalue_sequence(e), w);
}

double sugeno_trace(const HermitianMatrix& a, const WeightFunction& w) { return sugeno_trace(eigh(a), w); }

cplx choquet_trace_extended(const ComplexMatrix& a, const WeightFunction& w) {
    const FourParts parts = four_parts(a);
    return {choquet_trace(parts.pos_real, w) - choquet_trace(parts.neg_real, w),
            choquet_trace(parts.pos_imag, w) - choquet_trace(parts.neg_imag, w)};
}

cplx sugeno_trace_extended(const ComplexMatrix& a, const WeightFunction& w) {
    const FourParts parts = four_parts(a);
    return {sugeno_trace(parts.pos_real, w) - sugeno_trace(parts.neg_real, w),
            sugeno_trace(parts.pos_imag, w) - sugeno_trace(parts.neg_imag, w)};
}

double sugeno_max_oracle(const HermitianMatrix& a, const WeightFunction& w) {
    const EigenSequence e = eigh(a);
    const auto lambda = eigenvalue_sequence(e);
    // Compressing a to the top-n eigenspace leaves lambda_1..lambda_n; the largest
    // lambda with pap >= lambda p is the bottom of that block.
    double best = 0.0;
    double block_floor = lambda.empty() ? 0.0 : lambda.front();
    for (std::size_t n = 1; n <= lambda.size(); ++n) {
        block_floor = std::min(block_floor, lambda[n - 1]);
        const double feasible = std::min(block_floor, w.value(n));
        if (feasible > best) best = feasible;
    }
    return best;
}

ObservationProjections observation_projections(const HermitianMatrix& a, const WeightFunction& w) {
    if (!(w.value(1) > 0.0)) throw Error(Errc::AlphaOneZero, "observation projections need alpha(1) > 0");
    const EigenSequence e = eigh(a);
    const auto lambda = eigenvalue_sequence(e);
    const std::size_t dim = lambda.size();
    auto lam = [&](std::size_t i) { return i <= dim ? lambda[i - 1] : 0.0; };

    ObservationProjections out;
    out.value = sugeno_max_min(lambda, w);

    if (lam(1) < w.value(1)) {
        out.which = ObservationCase::BelowFirst;
        out.crossing = 1;
        out.rank_p = 1;
        out.rank_q0 = 0;
    } else {
        // lambda_{dim+1} = 0 < alpha(dim+1), so the crossing exists within dim+1
        std::size_t n = 2;
        while (!(lam(n - 1) >= w.value(n - 1) && lam(n) < w.value(n))) ++n;
        out.crossing = n;
        if (lam(n) >= w.value(n - 1)) {
            out.which = ObservationCase::TopAboveLower;
            out.rank_p = n;
        } else {
            out.which = ObservationCase::TopBelowLower;
            out.rank_p = n - 1;
        }
        out.rank_q0 = n - 1;
    }
    out.p = e.top_projection(out.rank_p);
    out.q0 = e.top_projection(out.rank_q0);
    return out;
}

}  // namespace nlt
