#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "densecode/complex_matrix.hpp"

namespace densecode {

/// Index (m, n) of a Weyl-Heisenberg operator in dimension d.
struct WeylIndex {
    int m;
    int n;
    int d;
};

inline void validate(const WeylIndex& idx) {
    require(idx.d >= 1, "WeylIndex: d must be >= 1");
    require(idx.m >= 0 && idx.m < idx.d, "WeylIndex: m out of range");
    require(idx.n >= 0 && idx.n < idx.d, "WeylIndex: n out of range");
}

/// Flat enumeration i = m*d + n of the d^2 operators V_i.
inline int flat_weyl_index(const WeylIndex& idx) { return idx.m * idx.d + idx.n; }

inline WeylIndex weyl_index_from_flat(int i, int d) {
    require(i >= 0 && i < d * d, "weyl_index_from_flat: index out of range");
    return {i / d, i % d, d};
}

/// V_mn = sum_k exp(2 pi i k n / d) |k><k+m mod d|. Unitary, traceless
/// unless (m, n) = (0, 0), and tr[V_mn V_m'n'^dag] = d delta delta.
inline ComplexMatrix weyl_operator(const WeylIndex& idx) {
    validate(idx);
    const int d = idx.d;
    ComplexMatrix v(d);
    for (int k = 0; k < d; ++k) {
        const double angle = 2.0 * std::numbers::pi * k * idx.n / d;
        v(k, (k + idx.m) % d) = Complex(std::cos(angle), std::sin(angle));
    }
    return v;
}

/// All d^2 Weyl operators in flat-index order.
inline std::vector<ComplexMatrix> weyl_family(int d) {
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d * d; ++i) out.push_back(weyl_operator(weyl_index_from_flat(i, d)));
    return out;
}

/// Generalized Gell-Mann generators of SU(d): d^2 - 1 traceless Hermitian
/// matrices with tr(lambda_i lambda_j) = 2 delta_ij. Ordering: symmetric
/// pairs, antisymmetric pairs, then diagonal generators.
inline std::vector<ComplexMatrix> su_generators(int d) {
    require(d >= 2, "su_generators: d must be >= 2");
    std::vector<ComplexMatrix> gens;
    gens.reserve(static_cast<std::size_t>(d) * d - 1);
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix sym(d);
            sym(j, k) = 1.0;
            sym(k, j) = 1.0;
            gens.push_back(std::move(sym));
        }
    for (int j = 0; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
            ComplexMatrix anti(d);
            anti(j, k) = Complex(0.0, -1.0);
            anti(k, j) = Complex(0.0, 1.0);
            gens.push_back(std::move(anti));
        }
    for (int l = 1; l < d; ++l) {
        ComplexMatrix diag(d);
        const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
        for (int j = 0; j < l; ++j) diag(j, j) = norm;
        diag(l, l) = -norm * l;
        gens.push_back(std::move(diag));
    }
    return gens;
}

}  // namespace densecode
