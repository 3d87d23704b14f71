#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nlt/integrals.hpp"
#include "nlt/matrix.hpp"
#include "nlt/spectral.hpp"

namespace nlt {

inline constexpr double kMajorizationTolerance = 1e-10;
inline constexpr double kDominationTolerance = 1e-9;
inline constexpr double kRankFloor = 1e-12;

struct MajorizationVerdict {
    bool relation_holds = true;
    std::optional<std::size_t> failing_index;   // 1-based prefix length; 0 flags the total sum
    std::vector<double> partial_sums_x;
    std::vector<double> partial_sums_y;
};

// x <_w y: prefix sums of x (decreasing) never exceed those of y. Shorter input is zero-padded.
MajorizationVerdict weak_majorizes(const NonNegVector& y, const NonNegVector& x);
// x < y: weak majorization plus equal totals
MajorizationVerdict majorizes(const NonNegVector& y, const NonNegVector& x);

// lambda_i(a) <= lambda_i(b) + 1e-9 for every i
bool eigen_dominates(const HermitianMatrix& b, const HermitianMatrix& a);

// c with ||c|| <= 1 and a = c b c*, from the two decreasing diagonalizations; NotDominated otherwise
ComplexMatrix construct_contraction(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace nlt
