#include "nlt/norms.hpp"

#include <cmath>

#include "nlt/error.hpp"
#include "nlt/spectral.hpp"
#include "nlt/traces.hpp"

namespace nlt {

namespace {

void require_alpha_one(const WeightFunction& w) {
    if (!(w.value(1) > 0.0)) throw Error(Errc::AlphaOneZero, "norms need alpha(1) > 0");
}

void require_rank(const ComplexMatrix& a, std::size_t k) {
    if (k == 0 || k > a.rows())
        throw Error(Errc::IndexOutOfRange, "Ky Fan index must lie in 1..dim");
}

void require_exponent(double p) {
    if (!std::isfinite(p) || p < 1.0) throw Error(Errc::InvalidExponent, "exponent p must be >= 1");
}

std::vector<double> powered(const std::vector<double>& s, double p) {
    std::vector<double> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = p == 1.0 ? s[i] : std::pow(s[i], p);
    return out;
}

}  // namespace

void validate(const NormSpec& spec) {
    require_alpha_one(spec.weight);
    require_exponent(spec.p);
}

double choquet_norm(const ComplexMatrix& a, const WeightFunction& w) {
    require_alpha_one(w);
    const auto s = singular_values(a);
    const double sum = choquet_sum_form(s, w);
    const double diff = choquet_difference_form(s, w);
    if (std::abs(sum - diff) > kDualFormTolerance * std::max(1.0, sum))
        throw Error(Errc::Internal, "Choquet sum and difference forms disagree");
    return sum;
}

double schatten_choquet_norm(const std::vector<double>& singular, const NormSpec& spec) {
    validate(spec);
    // lambda_k(|a|^p) = s_k^p: x -> x^p is increasing and keeps the order
    const double trace = choquet_sum_form(powered(singular, spec.p), spec.weight);
    return spec.p == 1.0 ? trace : std::pow(trace, 1.0 / spec.p);
}

double schatten_choquet_norm(const ComplexMatrix& a, const NormSpec& spec) {
    validate(spec);
    return schatten_choquet_norm(singular_values(a), spec);
}

double kyfan_norm(const ComplexMatrix& a, std::size_t k) {
    require_rank(a, k);
    const auto s = singular_values(a);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += s[i];
    return sum;
}

double kyfan_pk_norm(const ComplexMatrix& a, double p, std::size_t k) {
    require_rank(a, k);
    require_exponent(p);
    const auto sp = powered(singular_values(a), p);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) sum += sp[i];
    return std::pow(sum, 1.0 / p);
}

KyFanDecomposition kyfan_decomposition(const ComplexMatrix& a, const NormSpec& spec) {
    validate(spec);
    const std::size_t n = a.rows();
    const auto sp = powered(singular_values(a), spec.p);
    const auto c = spec.weight.increments_upto(n);

    KyFanDecomposition out;
    out.coefficients.resize(n);
    out.kyfan_pk_pow.resize(n);
    double partial = 0.0;
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        partial += sp[k];
        out.kyfan_pk_pow[k] = partial;
        out.coefficients[k] = k + 1 < n ? c[k] - c[k + 1] : c[k];
        total += out.coefficients[k] * partial;
    }
    out.value = std::pow(std::max(total, 0.0), 1.0 / spec.p);
    return out;
}

double norm_of_kyfan_norms(const ComplexMatrix& a, const NormSpec& spec) {
    const KyFanDecomposition dec = kyfan_decomposition(a, spec);
    double sum = 0.0;
    for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
        const double d = dec.coefficients[k];
        if (d < 0.0) throw Error(Errc::NotConcave, "increments must be non-increasing up to dim");
        const double nu = std::pow(d, 1.0 / spec.p) * std::pow(dec.kyfan_pk_pow[k], 1.0 / spec.p);
        sum += std::pow(nu, spec.p);
    }
    return std::pow(sum, 1.0 / spec.p);
}

double sugeno_norm(const ComplexMatrix& a, const WeightFunction& w) {
    require_alpha_one(w);
    return sugeno_max_min(singular_values(a), w);
}

double sugeno_distance(const ComplexMatrix& a, const ComplexMatrix& b, const WeightFunction& w) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(Errc::DimensionMismatch, "distance between matrices of different shapes");
    if (!is_concave(w)) throw Error(Errc::NotConcave, "the Sugeno distance is a metric only for concave weights");
    return sugeno_norm(a - b, w);
}

HomogeneityProbe sugeno_homogeneity_probe(const ComplexMatrix& a, const WeightFunction& w, double k) {
    return {sugeno_norm(k * a, w), std::abs(k) * sugeno_norm(a, w)};
}

}  // namespace nlt
