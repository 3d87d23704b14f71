#include "nlt/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "nlt/error.hpp"

namespace nlt {

namespace {

std::vector<double> padded_decreasing(const NonNegVector& v, std::size_t n) {
    std::vector<double> out(v.entries().begin(), v.entries().end());
    out.resize(n, 0.0);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

MajorizationVerdict weak_majorizes(const NonNegVector& y, const NonNegVector& x) {
    const std::size_t n = std::max(x.size(), y.size());
    const auto xs = padded_decreasing(x, n);
    const auto ys = padded_decreasing(y, n);
    MajorizationVerdict out;
    out.partial_sums_x.resize(n);
    out.partial_sums_y.resize(n);
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        sx += xs[k];
        sy += ys[k];
        out.partial_sums_x[k] = sx;
        out.partial_sums_y[k] = sy;
        if (out.relation_holds && sx > sy + kMajorizationTolerance) {
            out.relation_holds = false;
            out.failing_index = k + 1;
        }
    }
    return out;
}

MajorizationVerdict majorizes(const NonNegVector& y, const NonNegVector& x) {
    if (x.size() != y.size()) throw Error(Errc::DimensionMismatch, "majorization needs equal lengths");
    MajorizationVerdict out = weak_majorizes(y, x);
    if (out.relation_holds && !out.partial_sums_x.empty() &&
        std::abs(out.partial_sums_x.back() - out.partial_sums_y.back()) > kMajorizationTolerance) {
        out.relation_holds = false;
        out.failing_index = 0;
    }
    return out;
}

bool eigen_dominates(const HermitianMatrix& b, const HermitianMatrix& a) {
    if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "eigenvalue domination needs equal dims");
    const auto la = eigenvalue_sequence(a);
    const auto lb = eigenvalue_sequence(b);
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] > lb[i] + kDominationTolerance) return false;
    }
    return true;
}

ComplexMatrix construct_contraction(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw Error(Errc::DimensionMismatch, "contraction needs equal dims");
    const EigenSequence ea = eigh(a);
    const EigenSequence eb = eigh(b);
    const auto la = eigenvalue_sequence(ea);
    const auto lb = eigenvalue_sequence(eb);
    const std::size_t n = la.size();

    std::vector<double> d(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (la[i] > lb[i] + kDominationTolerance)
            throw Error(Errc::NotDominated, "lambda_" + std::to_string(i + 1) + "(a) exceeds lambda_" +
                                                std::to_string(i + 1) + "(b)");
        if (lb[i] > kRankFloor) d[i] = std::min(1.0, std::sqrt(la[i] / lb[i]));
    }
    // a = U_a diag(la) U_a*, b = U_b diag(lb) U_b*  =>  c = U_a diag(d) U_b*
    ComplexMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += ea.vectors(i, k) * d[k] * std::conj(eb.vectors(j, k));
            c(i, j) = sum;
        }
    return c;
}

}  // namespace nlt
