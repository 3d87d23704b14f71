#pragma once
//
// Norms induced by the non-linear traces: weighted trace and Schatten p-norms,
// Ky Fan k and p-k norms, and the Sugeno norm and metric.
//

#include <cstddef>
#include <vector>

#include "nlt/matrix.hpp"
#include "nlt/weights.hpp"

namespace nlt {

struct NormSpec {
    WeightFunction weight;
    double p = 1.0;
};

// throws AlphaOneZero / InvalidExponent
void validate(const NormSpec& spec);

// phi_alpha(|a|)
double choquet_norm(const ComplexMatrix& a, const WeightFunction& w);
// phi_alpha(|a|^p)^(1/p)
double schatten_choquet_norm(const ComplexMatrix& a, const NormSpec& spec);
// same, from precomputed singular values
double schatten_choquet_norm(const std::vector<double>& singular, const NormSpec& spec);

double kyfan_norm(const ComplexMatrix& a, std::size_t k);
double kyfan_pk_norm(const ComplexMatrix& a, double p, std::size_t k);

struct KyFanDecomposition {
    std::vector<double> coefficients;   // c_k - c_{k+1} for k < n, c_n last
    std::vector<double> kyfan_pk_pow;   // ||a||_{p,(k)}^p
    double value = 0.0;                 // (sum coefficients * kyfan_pk_pow)^(1/p)
};

KyFanDecomposition kyfan_decomposition(const ComplexMatrix& a, const NormSpec& spec);

// p-norm of (d_k^(1/p) ||a||_{p,(k)})_k; needs non-increasing c_1..c_n (NotConcave otherwise)
double norm_of_kyfan_norms(const ComplexMatrix& a, const NormSpec& spec);

// psi_alpha(|a|)
double sugeno_norm(const ComplexMatrix& a, const WeightFunction& w);
// ||a - b||_alpha; a metric only for concave alpha, so anything else is NotConcave
double sugeno_distance(const ComplexMatrix& a, const ComplexMatrix& b, const WeightFunction& w);

// ||k a||_alpha next to |k| ||a||_alpha; the two differ in general
struct HomogeneityProbe {
    double scaled_norm = 0.0;
    double scaled_value = 0.0;
};
HomogeneityProbe sugeno_homogeneity_probe(const ComplexMatrix& a, const WeightFunction& w, double k);

}  // namespace nlt
