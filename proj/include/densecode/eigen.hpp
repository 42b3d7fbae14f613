#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "densecode/complex_matrix.hpp"

namespace densecode {

/// Real eigenvalues sorted in descending order.
struct Spectrum {
    std::vector<double> values;
};

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k is the eigenvector of values[k]
};

namespace detail {

// One complex Jacobi rotation zeroing a(p,q). The 2x2 block
// [[app, apq], [conj(apq), aqq]] is diagonalized by the unitary
// [[c, s], [-conj(s), c]] with c real and s = sin(theta) * apq/|apq|.
struct JacobiRotation {
    double c;
    Complex s;
};

inline JacobiRotation make_rotation(double app, double aqq, Complex apq) {
    const double mag = std::abs(apq);
    const Complex phase = apq / mag;
    const double tau = (app - aqq) / (2.0 * mag);
    const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c * phase};
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    const int n = a.dim();
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(a(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws if the input is not Hermitian within `hermitian_tol`.
inline EigenSystem hermitian_eigensystem(const ComplexMatrix& m, double hermitian_tol = 1e-10) {
    require(m.is_hermitian(hermitian_tol), "hermitian_eigensystem: matrix is not Hermitian");
    const int n = m.dim();

    // Work on the exactly Hermitian average of m and its adjoint.
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    const double stop = 1e-15 * scale;
    const int max_sweeps = 60;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (detail::off_diagonal_norm(a) <= stop) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-18 * scale) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                const auto [c, s] = detail::make_rotation(a(p, p).real(), a(q, q).real(), a(p, q));
                const Complex sc = std::conj(s);
                // A <- U† A U on rows/columns p and q.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - sc * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = sc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);
                for (int k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sc * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

inline Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tol = 1e-10) {
    return Spectrum{hermitian_eigensystem(m, hermitian_tol).values};
}

}  // namespace densecode
