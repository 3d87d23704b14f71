#include <doctest.h>

#include "nlt/error.hpp"
#include "nlt/falsify.hpp"
#include "nlt/integrals.hpp"
#include "nlt/norms.hpp"
#include "oracles.hpp"

using namespace nlt;

TEST_CASE("random source is deterministic") {
    RandomSource a(42), b(42), c(43);
    for (int i = 0; i < 10; ++i) {
        const double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
    CHECK(a.normal() == b.normal());
    CHECK(a.uniform() != c.uniform());
    CHECK(a.fork(3).uniform() == RandomSource(45).uniform());
    // first output of the standard engine, top 53 bits
    CHECK(RandomSource(5489).uniform() == static_cast<double>(14514284786278117030ull >> 11) * 0x1.0p-53);
}

TEST_CASE("random generators") {
    RandomSource r(1);
    const ComplexMatrix u = random_unitary(r, 5);
    CHECK(frobenius_distance(u.adjoint() * u, ComplexMatrix::identity(5)) <= 1e-12);
    const ComplexMatrix p = random_projection(r, 5, 2);
    CHECK(frobenius_distance(p * p, p) <= 1e-12);
    CHECK(std::abs(p(0, 0) + p(1, 1) + p(2, 2) + p(3, 3) + p(4, 4) - 2.0) <= 1e-12);
    CHECK(oracle::singular_values(random_contraction(r, 4))[0] <= 1.0 + 1e-12);

    const HermitianMatrix a = random_psd(r, 2, std::vector<double>{1, 0});
    const auto ev = oracle::eigenvalues(a.matrix());
    CHECK(std::abs(ev[0] - 1) <= 1e-12);
    CHECK(std::abs(ev[1]) <= 1e-12);
    RandomSource s1(9), s2(9);
    CHECK(random_psd(s1, 3).matrix().data()[1] == random_psd(s2, 3).matrix().data()[1]);
    for (int t = 0; t < 20; ++t)
        for (double v : oracle::eigenvalues(random_psd(r, 5).matrix())) CHECK(v >= -1e-12);
    CHECK_THROWS_AS(random_psd(r, 2, std::vector<double>{1, -1}), Error);
    CHECK_THROWS_AS(random_psd(r, 2, std::vector<double>{1}), Error);
}

TEST_CASE("random weights") {
    RandomSource r(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t len = 1 + r.index(6);
        CHECK(is_concave(random_weight(r, len, true)));
        const WeightFunction w = random_weight(r, len, false);
        CHECK_FALSE(is_concave(w));
        CHECK(w.value(1) > 0);
    }
    RandomSource a(3), b(3);
    const auto wa = random_weight(a, 4, false), wb = random_weight(b, 4, false);
    CHECK(std::vector<double>(wa.increments().begin(), wa.increments().end()) ==
          std::vector<double>(wb.increments().begin(), wb.increments().end()));
}

TEST_CASE("comonotone spectrum function pairs") {
    RandomSource r(4);
    for (int t = 0; t < 30; ++t) {
        const auto pts = random_distinct_spectrum(r, 5);
        auto [f, g] = random_comonotone_pair(r, pts);
        CHECK(f(0) == 0.0);
        CHECK(g(0) == 0.0);
        std::vector<double> fv, gv;
        for (double x : pts) {
            fv.push_back(f(x));
            gv.push_back(g(x));
        }
        CHECK(are_comonotonic(NonNegVector(fv), NonNegVector(gv)));
    }
}

TEST_CASE("the alpha = (0,1,3) instance") {
    const WeightFunction w({1, 2}, 0);
    const NormSpec spec{w, 1};
    CHECK(schatten_choquet_norm(ComplexMatrix::identity(2), spec) == 3.0);
    CHECK(schatten_choquet_norm(ComplexMatrix::diagonal({1, 0}), spec) == 1.0);
    CHECK(schatten_choquet_norm(ComplexMatrix::diagonal({0, 1}), spec) == 1.0);

    const Counterexample c = proof_family_counterexample(w, 1, 2);
    CHECK(oracle::max_abs_diff(c.a, ComplexMatrix::diagonal({1, 0})) == 0.0);
    CHECK(oracle::max_abs_diff(c.b, ComplexMatrix::diagonal({0, 1})) == 0.0);
    CHECK(c.lhs == 3.0);
    CHECK(c.rhs == 2.0);
    CHECK(c.margin == 1.0);
    CHECK(verify_counterexample(c));
}

TEST_CASE("proof family counterexamples") {
    CHECK_THROWS_AS(proof_family_counterexample(WeightFunction::selector(2), 1, 4), Error);

    const Counterexample c = proof_family_counterexample(WeightFunction({1, 1, 5}, 0), 2, 3);
    CHECK(c.margin > 1e-9);
    CHECK(verify_counterexample(c));

    const std::vector<WeightFunction> regression{
        WeightFunction({1, 2}, 0),        WeightFunction({1, 1, 5}, 0),      WeightFunction({2, 1}, 1.5),
        WeightFunction({1, 0, 1}, 0),     WeightFunction({1, 0, 0, 2}, 0),       WeightFunction({1, 0.5, 0.6}, 0.1),
        WeightFunction({1}, 1.01),        WeightFunction({0.3, 0.3, 0.3, 0.9}, 0),
    };
    for (const auto& w : regression)
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            const Counterexample ce = proof_family_counterexample(w, p, 6);
            CHECK(ce.margin > 1e-9);
            CHECK(verify_counterexample(ce));
            // independent recomputation from oracle singular values
            auto norm = [&](const ComplexMatrix& m) {
                const auto s = oracle::singular_values(m);
                double sum = 0;
                for (std::size_t k = 0; k < s.size(); ++k) sum += w.increment(k + 1) * std::pow(s[k], p);
                return std::pow(sum, 1 / p);
            };
            CHECK(norm(ce.a + ce.b) - norm(ce.a) - norm(ce.b) > 1e-9);
        }

    try {
        proof_family_counterexample(WeightFunction({1}, 1), 1, 4);
        FAIL("expected ConcaveWeight");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConcaveWeight);
    }
    try {
        proof_family_counterexample(WeightFunction({1, 1, 5}, 0), 1, 2);
        FAIL("expected DimensionTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DimensionTooSmall);
    }
}

TEST_CASE("random counterexample search") {
    const RandomSource rng(7);
    CHECK_FALSE(random_search_counterexample(WeightFunction({1, 2}, 0), 1, 2, 0, rng).has_value());
    const auto found = random_search_counterexample(WeightFunction({1, 2}, 0), 1, 2, 1000, rng);
    REQUIRE(found.has_value());
    CHECK(verify_counterexample(*found));
    const auto again = random_search_counterexample(WeightFunction({1, 2}, 0), 1, 2, 1000, rng);
    CHECK(again->margin == found->margin);
    CHECK_FALSE(random_search_counterexample(WeightFunction({3, 2, 1}, 0.5), 1.5, 4, 10000, rng).has_value());
}
