#include "nlt/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nlt/spectral.hpp"

namespace nlt {

double RandomSource::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RandomSource::index(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
}

double RandomSource::normal() {
    const double u1 = 1.0 - uniform();   // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx RandomSource::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix random_complex_matrix(RandomSource& rng, std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
    return m;
}

ComplexMatrix random_isometry(RandomSource& rng, std::size_t n, std::size_t k) {
    ComplexMatrix u(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) u(i, j) = rng.complex_normal();
    // modified Gram-Schmidt over columns, twice for orthogonality to round-off
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t l = 0; l < j; ++l) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, l)) * u(i, j);
                for (std::size_t i = 0; i < n; ++i) u(i, j) -= dot * u(i, l);
            }
            double norm = 0.0;
            for (std::size_t i = 0; i < n; ++i) norm += std::norm(u(i, j));
            norm = std::sqrt(norm);
            for (std::size_t i = 0; i < n; ++i) u(i, j) /= norm;
        }
    }
    return u;
}

ComplexMatrix random_unitary(RandomSource& rng, std::size_t n) { return random_isometry(rng, n, n); }

ComplexMatrix random_contraction(RandomSource& rng, std::size_t n) {
    ComplexMatrix m = random_complex_matrix(rng, n);
    const double scale = rng.uniform() / operator_norm(m);
    return scale * m;
}

ComplexMatrix random_projection(RandomSource& rng, std::size_t n, std::size_t k) {
    const ComplexMatrix v = random_isometry(rng, n, std::min(k, n));
    return v * v.adjoint();
}

}  // namespace nlt
