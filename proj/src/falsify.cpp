#include "nlt/falsify.hpp"

#include <algorithm>
#include <cmath>

#include "nlt/error.hpp"
#include "nlt/norms.hpp"

namespace nlt {

namespace {

constexpr double kMinimumStepUp = 0.05;

double norm_of(const ComplexMatrix& m, const NormSpec& spec) { return schatten_choquet_norm(m, spec); }

double diagonal_norm(std::vector<double> d, const NormSpec& spec) {
    std::sort(d.begin(), d.end(), std::greater<>());
    return schatten_choquet_norm(d, spec);
}

Counterexample evaluate(ComplexMatrix a, ComplexMatrix b, const WeightFunction& w, double p) {
    const NormSpec spec{w, p};
    Counterexample c{std::move(a), std::move(b), w, p, 0.0, 0.0, 0.0};
    c.lhs = norm_of(c.a + c.b, spec);
    c.rhs = norm_of(c.a, spec) + norm_of(c.b, spec);
    c.margin = c.lhs - c.rhs;
    return c;
}

bool has_step_up(std::span<const double> c, double tail) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (c[i + 1] >= c[i] + kMinimumStepUp) return true;
    return tail >= c.back() + kMinimumStepUp;
}

}  // namespace

HermitianMatrix random_psd(RandomSource& rng, std::size_t dim, std::optional<std::vector<double>> spectrum) {
    if (dim == 0) throw Error(Errc::BadSpectrum, "dimension must be at least 1");
    std::vector<double> lambda;
    if (spectrum) {
        if (spectrum->size() != dim) throw Error(Errc::BadSpectrum, "spectrum length differs from dim");
        for (double v : *spectrum)
            if (!std::isfinite(v) || v < 0.0) throw Error(Errc::BadSpectrum, "spectrum must be finite and >= 0");
        lambda = std::move(*spectrum);
    } else {
        lambda.resize(dim);
        for (auto& v : lambda) v = std::abs(rng.normal());
    }
    const ComplexMatrix u = random_unitary(rng, dim);
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            cplx sum = 0.0;
            for (std::size_t k = 0; k < dim; ++k) sum += u(i, k) * lambda[k] * std::conj(u(j, k));
            m(i, j) = sum;
        }
    return HermitianMatrix::hermitian_part(m);
}

WeightFunction random_weight(RandomSource& rng, std::size_t len, bool concave) {
    if (len == 0) len = 1;
    std::vector<double> c(len);
    if (concave) {
        for (auto& v : c) v = rng.uniform(0.05, 1.05);
        std::sort(c.begin(), c.end(), std::greater<>());
        const double tail = c.back() * rng.uniform();
        return WeightFunction(std::move(c), tail);
    }
    for (;;) {
        for (auto& v : c) v = rng.uniform(0.0, 1.0);
        const double tail = rng.uniform(0.0, 1.0);
        if (c[0] > 0.0 && has_step_up(c, tail)) return WeightFunction(std::move(c), tail);
    }
}

std::vector<double> random_distinct_spectrum(RandomSource& rng, std::size_t dim) {
    std::vector<double> out;
    while (out.size() < dim) {
        const double v = rng.uniform(0.1, 10.1);
        bool apart = true;
        for (double u : out) apart = apart && std::abs(u - v) >= 1e-3;
        if (apart) out.push_back(v);
    }
    return out;
}

std::pair<SpectrumFunction, SpectrumFunction> random_comonotone_pair(RandomSource& rng,
                                                                     std::vector<double> points) {
    std::vector<double> pts{0.0};
    for (double x : points)
        if (x != 0.0 && std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    // Fisher-Yates on everything after the leading 0
    for (std::size_t k = pts.size() - 1; k > 1; --k) std::swap(pts[k], pts[1 + rng.index(k)]);
    std::vector<double> f(pts.size(), 0.0), g(pts.size(), 0.0);
    for (std::size_t k = 1; k < pts.size(); ++k) {
        f[k] = f[k - 1] + rng.uniform(0.0, 2.0) * (rng.uniform() < 0.2 ? 0.0 : 1.0);
        g[k] = g[k - 1] + rng.uniform(0.0, 2.0) * (rng.uniform() < 0.2 ? 0.0 : 1.0);
    }
    return {SpectrumFunction(pts, std::move(f)), SpectrumFunction(pts, std::move(g))};
}

bool verify_counterexample(const Counterexample& c) {
    const Counterexample again = evaluate(c.a, c.b, c.weight, c.p);
    return again.margin > kViolationMargin;
}

Counterexample proof_family_counterexample(const WeightFunction& w, double p, std::size_t dim) {
    const std::optional<std::size_t> first = first_nonconcave_index(w);
    if (!first) throw Error(Errc::ConcaveWeight, "the weight is concave, so the triangle inequality holds");
    const std::size_t i = *first;
    if (dim < i + 2)
        throw Error(Errc::DimensionTooSmall, "dim must be at least " + std::to_string(i + 2));
    const NormSpec spec{w, p};
    validate(spec);

    auto family = [&](double s, double t) {
        std::vector<double> a(dim, 0.0), b(dim, 0.0);
        for (std::size_t k = 0; k < i; ++k) a[k] = b[k] = 2.0;
        a[i] = 1.0 + s;
        a[i + 1] = 1.0 - t;
        b[i] = 1.0 - t;
        b[i + 1] = 1.0 + s;
        return std::pair{a, b};
    };
    auto margin_at = [&](double s, double t) {
        auto [a, b] = family(s, t);
        std::vector<double> sum(dim);
        for (std::size_t k = 0; k < dim; ++k) sum[k] = a[k] + b[k];
        return diagonal_norm(sum, spec) - diagonal_norm(a, spec) - diagonal_norm(b, spec);
    };
    auto build = [&](double s, double t) {
        auto [a, b] = family(s, t);
        return evaluate(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b), w, p);
    };

    if (margin_at(0.0, 1.0) > kViolationMargin) {
        Counterexample c = build(0.0, 1.0);
        if (c.margin > kViolationMargin) return c;
    }

    // largest s <= 1 with alpha(i+2) - alpha(i) > (1+s)^p (alpha(i+1) - alpha(i))
    const double gap = w.value(i + 2) - w.value(i);
    const double step = w.increment(i + 1);
    double s0 = 1.0;
    if (step > 0.0) s0 = std::min(1.0, 0.999 * (std::pow(gap / step, 1.0 / p) - 1.0));
    const double s_min = s0 * 1e-4;
    for (std::size_t si = 0; si < kGridS; ++si) {
        const double frac = static_cast<double>(si) / static_cast<double>(kGridS - 1);
        const double s = s0 * std::pow(s_min / s0, frac);
        for (std::size_t ti = 0; ti < kGridT; ++ti) {
            const double t = static_cast<double>(ti) / static_cast<double>(kGridT - 1);
            if (margin_at(s, t) <= kViolationMargin) continue;
            Counterexample c = build(s, t);
            if (c.margin > kViolationMargin) return c;
        }
    }
    throw Error(Errc::SearchExhausted, "no violation on the 64 x 64 grid");
}

std::optional<Counterexample> random_search_counterexample(const WeightFunction& w, double p, std::size_t dim,
                                                           std::size_t trials, const RandomSource& rng) {
    if (dim == 0) return std::nullopt;
    const NormSpec spec{w, p};
    validate(spec);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        RandomSource r = rng.fork(trial);
        if (trial % 2 == 0) {
            std::vector<double> a(dim), b(dim), sum(dim);
            for (auto& v : a) v = r.uniform();
            for (auto& v : b) v = r.uniform();
            for (std::size_t k = 0; k < dim; ++k) sum[k] = a[k] + b[k];
            const double margin = diagonal_norm(sum, spec) - diagonal_norm(a, spec) - diagonal_norm(b, spec);
            if (margin <= kViolationMargin) continue;
            Counterexample c = evaluate(ComplexMatrix::diagonal(a), ComplexMatrix::diagonal(b), w, p);
            if (c.margin > kViolationMargin) return c;
        } else {
            Counterexample c = evaluate(random_complex_matrix(r, dim), random_complex_matrix(r, dim), w, p);
            if (c.margin > kViolationMargin) return c;
        }
    }
    return std::nullopt;
}

}  // namespace nlt
