#include <doctest.h>

#include "nlt/error.hpp"
#include "nlt/falsify.hpp"
#include "nlt/majorization.hpp"
#include "nlt/random.hpp"
#include "nlt/traces.hpp"
#include "oracles.hpp"

using namespace nlt;

TEST_CASE("weak majorization") {
    CHECK(weak_majorizes({3, 1}, {3, 1}).relation_holds);
    CHECK(weak_majorizes({3, 1}, {2, 2}).relation_holds);
    const auto v = weak_majorizes({2, 2}, {3, 1});
    CHECK_FALSE(v.relation_holds);
    CHECK(v.failing_index == 1u);
    CHECK(v.partial_sums_x == std::vector<double>{3, 4});
    CHECK(v.partial_sums_y == std::vector<double>{2, 4});
    // shorter input is zero-padded
    CHECK(weak_majorizes({3, 1, 0}, {2}).relation_holds);
}

TEST_CASE("majorization") {
    CHECK(majorizes({3, 1}, {2, 2}).relation_holds);
    const auto v = majorizes({3, 1}, {1, 1});
    CHECK_FALSE(v.relation_holds);
    CHECK(v.failing_index == 0u);
    CHECK_THROWS_AS(majorizes({3, 1}, {1}), Error);
}

TEST_CASE("majorization is reflexive and transitive on random triples") {
    RandomSource r(1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + r.index(6);
        std::vector<double> x(n), y(n), z(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = r.uniform(0, 3);
            y[i] = r.uniform(0, 3);
            z[i] = r.uniform(0, 3);
        }
        const NonNegVector X(x), Y(y), Z(z);
        CHECK(weak_majorizes(X, X).relation_holds);
        if (weak_majorizes(Y, X).relation_holds && weak_majorizes(Z, Y).relation_holds)
            CHECK(weak_majorizes(Z, X).relation_holds);
        if (majorizes(Y, X).relation_holds) CHECK(weak_majorizes(Y, X).relation_holds);
        // the constant vector with the same mean is majorized by everything
        double mean = 0;
        for (double v : x) mean += v / n;
        CHECK(majorizes(X, NonNegVector(std::vector<double>(n, mean))).relation_holds);
    }
}

TEST_CASE("eigenvalue domination") {
    RandomSource r(2);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + r.index(5);
        const HermitianMatrix a = random_psd(r, n);
        const HermitianMatrix b = HermitianMatrix::hermitian_part(a.matrix() + random_psd(r, n).matrix());
        CHECK(eigen_dominates(b, a));
        CHECK(eigen_dominates(a, a));
        CHECK_FALSE(eigen_dominates(a, HermitianMatrix::hermitian_part(2.0 * a.matrix())));
    }
    CHECK_THROWS_AS(eigen_dominates(HermitianMatrix::diagonal({1, -1}), HermitianMatrix::diagonal({0, 0})), Error);
}

TEST_CASE("contraction construction") {
    const ComplexMatrix c = construct_contraction(HermitianMatrix::diagonal({1, 0}), HermitianMatrix::diagonal({4, 1}));
    CHECK(oracle::max_abs_diff(c, ComplexMatrix::diagonal({0.5, 0})) <= 1e-12);

    RandomSource r(3);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + r.index(6);
        const HermitianMatrix b = random_psd(r, n);
        const ComplexMatrix x = random_contraction(r, n);
        const HermitianMatrix a = HermitianMatrix::hermitian_part(x * b.matrix() * x.adjoint());
        REQUIRE(eigen_dominates(b, a));
        const ComplexMatrix k = construct_contraction(a, b);
        CHECK(frobenius_distance(a.matrix(), k * b.matrix() * k.adjoint()) <= 1e-7 * (1 + a.matrix().frobenius_norm()));
        CHECK(oracle::singular_values(k)[0] <= 1 + 1e-9);

        const ComplexMatrix self = construct_contraction(b, b);
        CHECK(frobenius_distance(b.matrix(), self * b.matrix() * self.adjoint()) <= 1e-9 * (1 + b.matrix().frobenius_norm()));
    }
    // rank-deficient b
    const HermitianMatrix b = random_psd(r, 4, std::vector<double>{3, 1, 0, 0});
    const HermitianMatrix a = random_psd(r, 4, std::vector<double>{2, 0.5, 0, 0});
    const ComplexMatrix k = construct_contraction(a, b);
    CHECK(frobenius_distance(a.matrix(), k * b.matrix() * k.adjoint()) <= 1e-7 * (1 + a.matrix().frobenius_norm()));

    try {
        construct_contraction(HermitianMatrix::diagonal({2, 0}), HermitianMatrix::diagonal({1, 1}));
        FAIL("expected NotDominated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotDominated);
    }
}

TEST_CASE("domination is detected by the selector probes") {
    RandomSource r(4);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + r.index(5);
        const HermitianMatrix a = random_psd(r, n), b = random_psd(r, n);
        bool probes = true;
        for (std::size_t i = 1; i <= n; ++i)
            probes = probes && choquet_trace(a, WeightFunction::selector(i)) <= choquet_trace(b, WeightFunction::selector(i)) + 1e-8;
        CHECK(probes == eigen_dominates(b, a));
    }
}
