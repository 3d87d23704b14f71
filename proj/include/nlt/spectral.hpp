#pragma once
//
// Hermitian eigendecomposition and the spectral primitives built on it.
//

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "nlt/matrix.hpp"

namespace nlt {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdFloor = 1e-9;          // relative to 1 + ||a||
inline constexpr double kSpectrumMatchTolerance = 1e-9;
inline constexpr std::size_t kJacobiMaxSweeps = 100;

class HermitianMatrix {
public:
    HermitianMatrix() = default;
    // validates a = a* within 1e-12 per real/imaginary component
    explicit HermitianMatrix(const ComplexMatrix& a);

    // (a + a*) / 2 without validation
    static HermitianMatrix hermitian_part(const ComplexMatrix& a);
    static HermitianMatrix diagonal(std::span<const double> diag);
    static HermitianMatrix diagonal(std::initializer_list<double> diag);

    std::size_t dim() const noexcept { return m_.rows(); }
    const ComplexMatrix& matrix() const noexcept { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    struct Unchecked {};
    HermitianMatrix(ComplexMatrix m, Unchecked) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

// Eigenvalues in non-increasing order; column i of `vectors` belongs to values[i].
struct EigenSequence {
    std::vector<double> values;
    ComplexMatrix vectors;

    std::size_t dim() const noexcept { return values.size(); }
    // v_i v_i*
    ComplexMatrix projector(std::size_t i) const;
    // sum of the first k projectors
    ComplexMatrix top_projection(std::size_t k) const;
    // sum_i g(values[i]) v_i v_i*
    HermitianMatrix map(const std::function<double(double)>& g) const;
    HermitianMatrix reconstruct() const;
};

// Finite point-value map on a spectrum; must contain the point 0 with value 0.
class SpectrumFunction {
public:
    SpectrumFunction(std::vector<double> points, std::vector<double> values);

    std::span<const double> points() const noexcept { return points_; }
    std::span<const double> values() const noexcept { return values_; }

    // value at the point nearest to x; throws SpectrumMismatch if none lies within tol
    double operator()(double x, double tol = kSpectrumMatchTolerance) const;

private:
    std::vector<double> points_;
    std::vector<double> values_;
};

// Cyclic complex Jacobi. Stops when the off-diagonal Frobenius mass drops below
// 1e-13 (||a||_F + 1); NoConvergence if 100 sweeps leave more than 1e-9.
EigenSequence eigh(const HermitianMatrix& a);

// lambda_1 >= ... >= lambda_n >= 0, round-off negatives clamped; NotPositive below the floor
std::vector<double> eigenvalue_sequence(const HermitianMatrix& a);
std::vector<double> eigenvalue_sequence(const EigenSequence& e);

// floor used to tell round-off from genuine negative eigenvalues
double psd_floor(const EigenSequence& e);

HermitianMatrix abs_value(const ComplexMatrix& a);
std::vector<double> singular_values(const ComplexMatrix& a);
double operator_norm(const ComplexMatrix& a);

HermitianMatrix apply_spectrum_function(const HermitianMatrix& a, const SpectrumFunction& f);
// Same map at the level of the decomposition: values become f(lambda_i), re-sorted
// with their eigenvectors. Exact in the values (no second eigensolve).
EigenSequence apply_spectrum_function(const EigenSequence& e, const SpectrumFunction& f);

struct FourParts {
    HermitianMatrix pos_real;   // a1
    HermitianMatrix neg_real;   // a2
    HermitianMatrix pos_imag;   // a3
    HermitianMatrix neg_imag;   // a4
};

// a = a1 - a2 + i (a3 - a4), a1 a2 = a3 a4 = 0
FourParts four_parts(const ComplexMatrix& a);

}  // namespace nlt
