#include <doctest.h>

#include "nlt/error.hpp"
#include "nlt/integrals.hpp"
#include "nlt/random.hpp"
#include "oracles.hpp"

using namespace nlt;

namespace {

MonotoneMeasure card(std::size_t n, WeightFunction w) { return MonotoneMeasure::cardinality_based(n, std::move(w)); }

// random monotone table: mu(A) = max over subsets plus a random bump, built bottom-up
MonotoneMeasure random_table(RandomSource& r, std::size_t n) {
    std::vector<double> t(std::size_t{1} << n, 0.0);
    for (std::uint64_t a = 1; a < t.size(); ++a) {
        double floor = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            if (a >> k & 1) floor = std::max(floor, t[a & ~(std::uint64_t{1} << k)]);
        t[a] = floor + r.uniform();
    }
    return MonotoneMeasure::from_table(n, t);
}

std::function<double(std::uint64_t)> as_fn(const MonotoneMeasure& m) {
    return [&m](std::uint64_t a) { return m.value(a); };
}

}  // namespace

TEST_CASE("decreasing rearrangement") {
    CHECK(decreasing_rearrangement({1, 3, 2}) == NonNegVector{3, 2, 1});
    CHECK(decreasing_rearrangement({0, 0}) == NonNegVector{0, 0});
    CHECK(decreasing_rearrangement({2, 2, 5}) == NonNegVector{5, 2, 2});
    const std::vector<double> x{1, 4, 4, 0};
    CHECK(decreasing_order(x) == std::vector<std::size_t>{1, 2, 0, 3});
    CHECK_THROWS_AS(NonNegVector({1, -1}), Error);
}

TEST_CASE("choquet integral examples") {
    CHECK(choquet_integral({5, 3, 1}, card(3, WeightFunction({1}, 1))) == 9.0);
    CHECK(choquet_integral({5, 3, 1}, card(3, WeightFunction({1}, 0))) == 5.0);
    CHECK_THROWS_AS(choquet_integral({1, 2}, card(3, WeightFunction({1}, 1))), Error);
}

TEST_CASE("sugeno integral examples") {
    CHECK(sugeno_integral({5, 3, 0.5}, card(3, WeightFunction({1}, 1))) == 2.0);
    CHECK(sugeno_integral({0, 0, 0}, card(3, WeightFunction({4}, 1))) == 0.0);
    CHECK(sugeno_integral({5, 4}, card(2, WeightFunction({3}, 0))) == 3.0);
}

TEST_CASE("integrals match level-set oracles on random tables") {
    RandomSource r(17);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + r.index(6);
        const MonotoneMeasure m = random_table(r, n);
        std::vector<double> x(n);
        for (auto& v : x) v = r.uniform() < 0.2 ? 0.0 : std::floor(r.uniform(0, 5) * 4) / 4;   // ties likely
        CHECK(choquet_integral(NonNegVector(x), m) ==
              doctest::Approx(oracle::choquet_layer_cake(x, as_fn(m))).epsilon(1e-12));
        CHECK(sugeno_integral(NonNegVector(x), m) == oracle::sugeno_levels(x, as_fn(m)));
    }
}

TEST_CASE("comonotonicity") {
    CHECK(are_comonotonic({1, 2, 3}, {10, 20, 30}));
    CHECK_FALSE(are_comonotonic({1, 2}, {2, 1}));
    CHECK(are_comonotonic({1, 1, 5}, {7, 2, 9}));
    CHECK_THROWS_AS(are_comonotonic({1}, {1, 2}), Error);
}

TEST_CASE("comonotone additivity, homogeneity and monotonicity") {
    RandomSource r(23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + r.index(6);
        const MonotoneMeasure m = random_table(r, n);
        // comonotone pair: both non-decreasing along a shared random order
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[r.index(i)]);
        std::vector<double> f(n), g(n), s(n), j(n);
        double fa = 0, ga = 0;
        for (std::size_t i = 0; i < n; ++i) {
            fa += r.uniform(0, 3);
            ga += r.uniform() < 0.3 ? 0.0 : r.uniform(0, 3);
            f[order[i]] = fa;
            g[order[i]] = ga;
        }
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = f[i] + g[i];
            j[i] = std::max(f[i], g[i]);
        }
        const NonNegVector F(f), G(g);
        REQUIRE(are_comonotonic(F, G));
        CHECK(std::abs(choquet_integral(NonNegVector(s), m) - choquet_integral(F, m) - choquet_integral(G, m)) <= 1e-10);
        CHECK(sugeno_integral(NonNegVector(j), m) == std::max(sugeno_integral(F, m), sugeno_integral(G, m)));

        const double k = r.uniform(0, 4);
        std::vector<double> kf(f);
        for (auto& v : kf) v *= k;
        CHECK(choquet_integral(NonNegVector(kf), m) == doctest::Approx(k * choquet_integral(F, m)).epsilon(1e-12));
        CHECK(choquet_integral(F, m) <= choquet_integral(NonNegVector(s), m) + 1e-12);
        CHECK(sugeno_integral(F, m) <= sugeno_integral(NonNegVector(s), m));
    }
}

TEST_CASE("permutation invariance for cardinality measures") {
    RandomSource r(29);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + r.index(5);
        const auto m = card(n, WeightFunction({r.uniform(), r.uniform(), r.uniform()}, r.uniform()));
        std::vector<double> x(n);
        for (auto& v : x) v = r.uniform(0, 3);
        std::vector<double> y(x.rbegin(), x.rend());
        CHECK(choquet_integral(NonNegVector(x), m) == doctest::Approx(choquet_integral(NonNegVector(y), m)));
        CHECK(sugeno_integral(NonNegVector(x), m) == sugeno_integral(NonNegVector(y), m));
    }
}
