#pragma once
//
// Dense complex matrices at desk scale (n <= a few hundred).
//

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nlt {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> row_major);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n, n); }
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix diagonal(std::initializer_list<double> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const cplx> data() const noexcept { return data_; }

    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    double frobenius_norm() const;
    double max_abs() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

// v v* for a column v of m
ComplexMatrix column_outer(const ComplexMatrix& m, std::size_t col);

// Frobenius distance between equally shaped matrices
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nlt
