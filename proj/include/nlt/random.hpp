#pragma once
//
// Deterministic randomness. The engine is std::mt19937_64 (fully specified by
// the standard); uniforms take the top 53 bits and normals use Box-Muller, so
// identical seeds give identical streams on every conforming platform.
//

#include <cstddef>
#include <cstdint>
#include <random>

#include "nlt/matrix.hpp"

namespace nlt {

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    // [0, 1)
    double uniform();
    // [lo, hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // 0..n-1
    std::size_t index(std::size_t n);
    double normal();
    cplx complex_normal();

    // independent stream for trial i: seed + i
    RandomSource fork(std::uint64_t i) const { return RandomSource(seed_ + i); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// Gram-Schmidt on a complex Gaussian matrix
ComplexMatrix random_unitary(RandomSource& rng, std::size_t n);
// i.i.d. complex Gaussian entries, in general non-normal
ComplexMatrix random_complex_matrix(RandomSource& rng, std::size_t n);
// operator norm drawn uniformly from [0, 1]
ComplexMatrix random_contraction(RandomSource& rng, std::size_t n);
// n x k with orthonormal columns: Gram-Schmidt on k complex Gaussian vectors
ComplexMatrix random_isometry(RandomSource& rng, std::size_t n, std::size_t k);
// rank-k orthogonal projection onto a random subspace, v v* for v = random_isometry
ComplexMatrix random_projection(RandomSource& rng, std::size_t n, std::size_t k);

}  // namespace nlt
