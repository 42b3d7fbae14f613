#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace densecode {

using Complex = std::complex<double>;

inline void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    explicit ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
        require(dim > 0, "ComplexMatrix: dim must be positive");
    }

    ComplexMatrix(int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
        require(dim > 0, "ComplexMatrix: dim must be positive");
        require(entries_.size() == static_cast<std::size_t>(dim) * dim,
                "ComplexMatrix: entries length must equal dim^2");
    }

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Complex& operator()(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * dim_ + c];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require(dim_ == o.dim_, "matrix dim mismatch");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require(dim_ == o.dim_, "matrix dim mismatch");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    ComplexMatrix& operator*=(Complex s) {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
        require(a.dim_ == b.dim_, "matrix dim mismatch");
        const int n = a.dim_;
        ComplexMatrix c(n);
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    Complex trace() const {
        Complex t{};
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& e : entries_) s += std::norm(e);
        return std::sqrt(s);
    }

    /// Largest entrywise magnitude.
    double max_abs() const {
        double m = 0.0;
        for (const auto& e : entries_) m = std::max(m, std::abs(e));
        return m;
    }

    /// max_ij |M_ij - conj(M_ji)|.
    double hermiticity_defect() const {
        double m = 0.0;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

    bool is_hermitian(double tol = 1e-10) const { return hermiticity_defect() <= tol; }

    /// max-norm of U U† - I.
    double unitarity_defect() const {
        const ComplexMatrix p = (*this) * adjoint();
        return (p - identity(dim_)).max_abs();
    }

    bool is_unitary(double tol = 1e-10) const { return unitarity_defect() <= tol; }

private:
    int dim_ = 0;
    std::vector<Complex> entries_;  // row-major, length dim_^2
};

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

/// Kronecker product; block (i,j) of the result is a(i,j) * b.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    ComplexMatrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

inline ComplexMatrix sandwich(const ComplexMatrix& k, const ComplexMatrix& rho) {
    return k * rho * k.adjoint();
}

}  // namespace densecode
