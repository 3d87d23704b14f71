#include <doctest.h>

#include "nlt/error.hpp"
#include "nlt/falsify.hpp"
#include "nlt/random.hpp"
#include "nlt/traces.hpp"
#include "oracles.hpp"

using namespace nlt;

namespace {

const WeightFunction kLinear({1}, 1);

double min_eig(const ComplexMatrix& m) { return oracle::eigenvalues(m).back(); }

// all four inequalities of the observation projections
void check_observation(const HermitianMatrix& a, const WeightFunction& w, const ObservationProjections& o) {
    const std::size_t n = a.dim();
    const ComplexMatrix rest = ComplexMatrix::identity(n) - o.q0;
    CHECK(min_eig(o.p * a.matrix() * o.p - o.value * o.p) >= -1e-9);
    CHECK(o.value <= w.value(o.rank_p) + 1e-9);
    CHECK(min_eig(o.value * rest - rest * a.matrix() * rest) >= -1e-9);
    CHECK(w.value(o.rank_q0) <= o.value + 1e-9);
    CHECK(std::abs((o.p * o.p - o.p).max_abs()) <= 1e-9);
}

}  // namespace

TEST_CASE("choquet trace examples") {
    CHECK(choquet_trace(HermitianMatrix::diagonal({3, 1}), kLinear) == 4.0);
    CHECK(choquet_trace(HermitianMatrix::diagonal({3, 1}), WeightFunction({1}, 0)) == 3.0);
    RandomSource r(1);
    for (int t = 0; t < 20; ++t) {
        const HermitianMatrix a = random_psd(r, 5);
        const double top2 = oracle::top_sum(oracle::eigenvalues(a.matrix()), 2);
        CHECK(std::abs(choquet_trace(a, WeightFunction({1, 1}, 0)) - top2) <= 1e-8);
    }
    CHECK_THROWS_AS(choquet_trace(HermitianMatrix::diagonal({1, -1}), kLinear), Error);
}

TEST_CASE("sum and difference forms agree") {
    RandomSource r(2);
    for (int t = 0; t < 200; ++t) {
        std::vector<double> l(1 + r.index(8));
        for (auto& x : l) x = r.uniform(0, 10);
        std::sort(l.begin(), l.end(), std::greater<>());
        const WeightFunction w = random_weight(r, 1 + r.index(10), t % 2 == 0);
        // direct: sum_i (l_i - l_{i+1}) alpha(i)
        double diff = 0;
        for (std::size_t i = 0; i < l.size(); ++i)
            diff += (l[i] - (i + 1 < l.size() ? l[i + 1] : 0.0)) * oracle::alpha(w, i + 1);
        CHECK(std::abs(choquet_sum_form(l, w) - diff) <= 1e-10 * std::max(1.0, diff));
        CHECK(std::abs(choquet_difference_form(l, w) - diff) <= 1e-10 * std::max(1.0, diff));
    }
}

TEST_CASE("sugeno trace examples") {
    RandomSource r(3);
    const ComplexMatrix p = random_projection(r, 4, 2);
    CHECK(sugeno_trace(HermitianMatrix::hermitian_part(5.0 * p), WeightFunction({1, 2}, 1)) ==
          doctest::Approx(3).epsilon(1e-12));
    CHECK(sugeno_trace(HermitianMatrix::diagonal({0, 0, 0}), kLinear) == 0.0);
    CHECK(sugeno_trace(HermitianMatrix::diagonal({5, 3, 0.5}), kLinear) == 2.0);
}

TEST_CASE("psi of c times a projection is c meet alpha(dim p)") {
    RandomSource r(4);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + r.index(6), k = 1 + r.index(n);
        const double c = r.uniform(0, 6);
        const WeightFunction w = random_weight(r, 1 + r.index(6), t % 2 == 0);
        const HermitianMatrix a = HermitianMatrix::hermitian_part(c * random_projection(r, n, k));
        CHECK(std::abs(sugeno_trace(a, w) - std::min(c, w.value(k))) <= 1e-12 * (1 + c));
    }
}

TEST_CASE("extended traces") {
    CHECK(choquet_trace_extended(ComplexMatrix::diagonal({2, -3}), kLinear) == cplx(-1, 0));
    const cplx i1 = choquet_trace_extended(cplx(0, 1) * ComplexMatrix::identity(2), WeightFunction({1}, 0));
    CHECK(std::abs(i1 - cplx(0, 1)) <= 1e-12);
    CHECK(sugeno_trace_extended(ComplexMatrix::diagonal({-5}), WeightFunction({3}, 0)) == cplx(-3, 0));
    CHECK(sugeno_trace_extended(ComplexMatrix::diagonal({1, -1}), WeightFunction({2}, 2)) == cplx(0, 0));
    RandomSource r(5);
    const HermitianMatrix a = random_psd(r, 4);
    const WeightFunction w({2, 1}, 0.5);
    CHECK(std::abs(choquet_trace_extended(a.matrix(), w) - choquet_trace(a, w)) <= 1e-9);
    CHECK(std::abs(sugeno_trace_extended(a.matrix(), w) - sugeno_trace(a, w)) <= 1e-9);
}

TEST_CASE("max oracle examples") {
    CHECK(sugeno_max_oracle(HermitianMatrix::diagonal({5, 3, 0.5}), kLinear) == 2.0);
    CHECK(sugeno_max_oracle(HermitianMatrix::diagonal({1.5, 0, 0}), WeightFunction({2}, 0)) == 1.5);
    CHECK(sugeno_max_oracle(HermitianMatrix::diagonal({0, 0}), kLinear) == 0.0);
}

TEST_CASE("trace invariants") {
    RandomSource r(6);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + r.index(6);
        const HermitianMatrix a = random_psd(r, n);
        const WeightFunction w = random_weight(r, 1 + r.index(6), t % 2 == 0);
        const ComplexMatrix u = random_unitary(r, n);
        const HermitianMatrix ua = HermitianMatrix::hermitian_part(u * a.matrix() * u.adjoint());
        CHECK(std::abs(choquet_trace(ua, w) - choquet_trace(a, w)) <= 1e-8);
        CHECK(std::abs(sugeno_trace(ua, w) - sugeno_trace(a, w)) <= 1e-9);

        const HermitianMatrix b = HermitianMatrix::hermitian_part(a.matrix() + random_psd(r, n).matrix());
        CHECK(choquet_trace(a, w) <= choquet_trace(b, w) + 1e-8);
        CHECK(sugeno_trace(a, w) <= sugeno_trace(b, w) + 1e-9);

        const double k = r.uniform(0, 5);
        CHECK(std::abs(choquet_trace(HermitianMatrix::hermitian_part(k * a.matrix()), w) - k * choquet_trace(a, w)) <=
              1e-8 * (1 + k));

        // F-homogeneity through the truncation x -> min(k, x)
        const EigenSequence e = eigh(a);
        const HermitianMatrix cut = e.map([k](double x) { return std::min(k, std::max(x, 0.0)); });
        CHECK(std::abs(sugeno_trace(cut, w) - std::min(k, sugeno_trace(a, w))) <= 1e-9);

        // truncations b_k increase to a
        double prev = 0;
        for (std::size_t m = 0; m <= n; ++m) {
            ComplexMatrix bk(n, n);
            for (std::size_t i = 0; i < m; ++i) bk += e.values[i] * e.projector(i);
            const double v = choquet_trace(HermitianMatrix::hermitian_part(bk), w);
            CHECK(v >= prev - 1e-9);
            prev = v;
        }
        CHECK(std::abs(prev - choquet_trace(a, w)) <= 1e-8);
    }
}

TEST_CASE("observation projections follow the three cases") {
    SUBCASE("below the first weight") {
        const auto a = HermitianMatrix::diagonal({0.5});
        const auto o = observation_projections(a, kLinear);
        CHECK(o.which == ObservationCase::BelowFirst);
        CHECK(o.rank_p == 1);
        CHECK(o.rank_q0 == 0);
        CHECK(o.q0.max_abs() == 0.0);
        check_observation(a, kLinear, o);
    }
    SUBCASE("diag(5,3,0.5) with the linear weight crosses at n = 3 below alpha(2)") {
        const auto a = HermitianMatrix::diagonal({5, 3, 0.5});
        const auto o = observation_projections(a, kLinear);
        CHECK(o.value == 2.0);
        CHECK(o.crossing == 3);
        CHECK(o.which == ObservationCase::TopBelowLower);
        CHECK(o.rank_p == 2);
        CHECK(o.rank_q0 == 2);
        check_observation(a, kLinear, o);
    }
    SUBCASE("top eigenvalue in [alpha(n-1), alpha(n))") {
        const auto a = HermitianMatrix::diagonal({5, 1.5, 0});
        const auto o = observation_projections(a, kLinear);
        CHECK(o.which == ObservationCase::TopAboveLower);
        CHECK(o.crossing == 2);
        CHECK(o.rank_p == 2);
        CHECK(o.rank_q0 == 1);
        CHECK(o.value == 1.5);
        check_observation(a, kLinear, o);
    }
    SUBCASE("alpha(1) times a rank-one projection") {
        const WeightFunction w({2, 1}, 1);
        const auto a = HermitianMatrix::diagonal({0, 2, 0});
        const auto o = observation_projections(a, w);
        CHECK(o.which == ObservationCase::TopBelowLower);
        CHECK(o.rank_p == 1);
        CHECK(o.rank_q0 == 1);
        CHECK(o.value == 2.0);
        check_observation(a, w, o);
        // rotated copy: lambda_1 may land a rounding step below alpha(1), either case is valid
        RandomSource r(7);
        const auto ra = HermitianMatrix::hermitian_part(2.0 * random_projection(r, 3, 1));
        check_observation(ra, w, observation_projections(ra, w));
    }
    CHECK_THROWS_AS(observation_projections(HermitianMatrix::diagonal({1}), WeightFunction({0}, 1)), Error);
}

TEST_CASE("observation projections on random input") {
    RandomSource r(8);
    int seen[3] = {0, 0, 0};
    for (int t = 0; t < 120; ++t) {
        const std::size_t n = 1 + r.index(6);
        const HermitianMatrix a = HermitianMatrix::hermitian_part(r.uniform(0.05, 3.0) * random_psd(r, n).matrix());
        const WeightFunction w = random_weight(r, 1 + r.index(6), t % 2 == 0);
        const auto o = observation_projections(a, w);
        CHECK(o.value == sugeno_trace(a, w));
        check_observation(a, w, o);
        ++seen[static_cast<int>(o.which) - 'a'];
    }
    CHECK(seen[0] > 0);
    CHECK(seen[1] > 0);
    CHECK(seen[2] > 0);
}
