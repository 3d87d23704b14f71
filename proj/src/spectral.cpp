#include "nlt/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nlt/error.hpp"

namespace nlt {

HermitianMatrix::HermitianMatrix(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "Hermitian matrix must be square");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const cplx d = a(i, j) - std::conj(a(j, i));
            if (std::abs(d.real()) > kHermitianTolerance || std::abs(d.imag()) > kHermitianTolerance)
                throw Error(Errc::NotHermitian, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                    ") differs from the conjugate of its transpose");
        }
    }
    m_ = hermitian_part(a).m_;
}

HermitianMatrix HermitianMatrix::hermitian_part(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "Hermitian part needs a square matrix");
    const std::size_t n = a.rows();
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return HermitianMatrix(std::move(h), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> diag) {
    return HermitianMatrix(ComplexMatrix::diagonal(diag), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::initializer_list<double> diag) {
    return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix EigenSequence::projector(std::size_t i) const { return column_outer(vectors, i); }

ComplexMatrix EigenSequence::top_projection(std::size_t k) const {
    const std::size_t n = dim();
    ComplexMatrix p(n, n);
    for (std::size_t c = 0; c < std::min(k, n); ++c) p += projector(c);
    return p;
}

HermitianMatrix EigenSequence::map(const std::function<double(double)>& g) const {
    const std::size_t n = dim();
    ComplexMatrix out(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const double gv = g(values[c]);
        if (gv == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx vi = gv * vectors(i, c);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(vectors(j, c));
        }
    }
    return HermitianMatrix::hermitian_part(out);
}

HermitianMatrix EigenSequence::reconstruct() const {
    return map([](double x) { return x; });
}

SpectrumFunction::SpectrumFunction(std::vector<double> points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
    if (points_.size() != values_.size())
        throw Error(Errc::SpectrumMismatch, "spectrum function needs one value per point");
    bool has_zero = false;
    for (std::size_t k = 0; k < points_.size(); ++k) {
        if (!std::isfinite(points_[k]) || points_[k] < 0.0 || !std::isfinite(values_[k]) || values_[k] < 0.0)
            throw Error(Errc::SpectrumMismatch, "points and values must be finite and non-negative");
        if (points_[k] == 0.0) {
            has_zero = true;
            if (values_[k] != 0.0) throw Error(Errc::SpectrumMismatch, "value at 0 must be 0");
        }
        for (std::size_t l = 0; l < k; ++l) {
            if (points_[l] == points_[k]) throw Error(Errc::SpectrumMismatch, "points must be distinct");
        }
    }
    if (!has_zero) throw Error(Errc::SpectrumMismatch, "spectrum function must contain the point 0");
}

double SpectrumFunction::operator()(double x, double tol) const {
    std::size_t best = 0;
    double dist = std::abs(points_[0] - x);
    for (std::size_t k = 1; k < points_.size(); ++k) {
        const double d = std::abs(points_[k] - x);
        if (d < dist) {
            dist = d;
            best = k;
        }
    }
    if (dist > tol)
        throw Error(Errc::SpectrumMismatch, "no point within tolerance of eigenvalue " + std::to_string(x));
    return values_[best];
}

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One Hermitian Jacobi rotation zeroing a(p,q). U = diag(1, conj(phase)) * real rotation.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;
    const cplx phase_c = std::conj(apq / mag);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const cplx u_pp = c, u_pq = s, u_qp = -s * phase_c, u_qq = c * phase_c;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
        const cplx vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const cplx mpk = a(p, k), mqk = a(q, k);
        a(p, k) = std::conj(u_pp) * mpk + std::conj(u_qp) * mqk;
        a(q, k) = std::conj(u_pq) * mpk + std::conj(u_qq) * mqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

EigenSequence eigh(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-13 * (a.frobenius_norm() + 1.0);

    bool converged = false;
    for (std::size_t sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_mass(a) < threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    if (!converged) {
        const double off = off_diagonal_mass(a);
        if (off > 1e-9)
            throw Error(Errc::NoConvergence, "Jacobi sweeps exhausted with off-diagonal mass " + std::to_string(off));
    }

    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return diag[l] > diag[r]; });

    EigenSequence out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = diag[order[c]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, c) = v(i, order[c]);
    }
    return out;
}

double psd_floor(const EigenSequence& e) {
    double norm = 0.0;
    for (double x : e.values) norm = std::max(norm, std::abs(x));
    return -kPsdFloor * (1.0 + norm);
}

std::vector<double> eigenvalue_sequence(const EigenSequence& e) {
    const double floor = psd_floor(e);
    std::vector<double> out(e.values);
    for (double& x : out) {
        if (x < floor)
            throw Error(Errc::NotPositive, "eigenvalue " + std::to_string(x) + " is below the PSD floor");
        x = std::max(x, 0.0);
    }
    return out;
}

std::vector<double> eigenvalue_sequence(const HermitianMatrix& a) { return eigenvalue_sequence(eigh(a)); }

HermitianMatrix abs_value(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "absolute value needs a square matrix");
    const EigenSequence e = eigh(HermitianMatrix::hermitian_part(a.adjoint() * a));
    return e.map([](double x) { return std::sqrt(std::max(x, 0.0)); });
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "singular values need a square matrix");
    const EigenSequence e = eigh(HermitianMatrix::hermitian_part(a.adjoint() * a));
    std::vector<double> s(e.values.size());
    // eigenvalues of |a| are the square roots of those of a*a, order preserved
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(e.values[i], 0.0));
    return s;
}

double operator_norm(const ComplexMatrix& a) {
    const auto s = singular_values(a);
    return s.empty() ? 0.0 : s.front();
}

HermitianMatrix apply_spectrum_function(const HermitianMatrix& a, const SpectrumFunction& f) {
    const EigenSequence e = eigh(a);
    const auto lambda = eigenvalue_sequence(e);
    std::vector<double> mapped(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) mapped[i] = f(lambda[i]);
    std::size_t idx = 0;
    // map() walks the columns in order, so hand back the precomputed values
    return e.map([&](double) { return mapped[idx++]; });
}

EigenSequence apply_spectrum_function(const EigenSequence& e, const SpectrumFunction& f) {
    const auto lambda = eigenvalue_sequence(e);
    std::vector<double> mapped(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) mapped[i] = f(lambda[i]);
    std::vector<std::size_t> order(mapped.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return mapped[l] > mapped[r]; });

    const std::size_t n = e.dim();
    EigenSequence out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = mapped[order[c]];
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, c) = e.vectors(i, order[c]);
    }
    return out;
}

FourParts four_parts(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(Errc::NotSquare, "four-part decomposition needs a square matrix");
    const ComplexMatrix adj = a.adjoint();
    const HermitianMatrix re = HermitianMatrix::hermitian_part(0.5 * (a + adj));
    const HermitianMatrix im = HermitianMatrix::hermitian_part(cplx{0.0, -0.5} * (a - adj));
    const EigenSequence er = eigh(re);
    const EigenSequence ei = eigh(im);
    auto pos = [](double x) { return std::max(x, 0.0); };
    auto neg = [](double x) { return std::max(-x, 0.0); };
    return FourParts{er.map(pos), er.map(neg), ei.map(pos), ei.map(neg)};
}

}  // namespace nlt
