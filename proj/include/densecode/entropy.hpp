#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "densecode/density_matrix.hpp"
#include "densecode/eigen.hpp"

namespace densecode {

/// Sentinel for S(sigma || rho) when support(sigma) is not contained in
/// support(rho): the divergence is infinite, not an exception.
inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

namespace detail {

// Eigenvalues of density matrices may carry tiny negative noise; values in
// [-1e-9, 0) are clipped to zero, anything more negative is invalid input.
inline double clip_probability(double p) {
    if (p < 0.0) {
        require(p >= -1e-9, "entropy: eigenvalue below -1e-9");
        return 0.0;
    }
    return p;
}

inline double plog2p(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace detail

/// Shannon entropy in bits, with the 0 log 0 = 0 convention.
inline double shannon_entropy(std::span<const double> p) {
    double sum = 0.0, h = 0.0;
    for (double x : p) {
        x = detail::clip_probability(x);
        sum += x;
        h -= detail::plog2p(x);
    }
    require(std::abs(sum - 1.0) <= 1e-6, "shannon_entropy: probabilities must sum to 1");
    return h;
}

inline double shannon_entropy(const std::vector<double>& p) {
    return shannon_entropy(std::span<const double>(p));
}

/// Von Neumann entropy S(rho) = -tr(rho log2 rho) in bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
    double h = 0.0;
    for (double lam : hermitian_eigenvalues(rho.mat()).values)
        h -= detail::plog2p(detail::clip_probability(lam));
    return h;
}

/// Relative entropy S(sigma || rho) = tr(sigma log2 sigma - sigma log2 rho)
/// in bits. Returns kInfiniteDivergence when sigma has weight above 1e-9 in
/// the null space of rho (eigenvalues of rho below 1e-9 count as null).
inline double relative_entropy(const DensityMatrix& sigma, const DensityMatrix& rho) {
    require(sigma.dim() == rho.dim(), "relative_entropy: dimension mismatch");
    constexpr double support_tol = 1e-9;

    double tr_sigma_log_sigma = 0.0;
    for (double lam : hermitian_eigenvalues(sigma.mat()).values)
        tr_sigma_log_sigma += detail::plog2p(detail::clip_probability(lam));

    const EigenSystem rho_eig = hermitian_eigensystem(rho.mat());
    const int n = rho.dim();
    double tr_sigma_log_rho = 0.0;
    for (int k = 0; k < n; ++k) {
        // <v_k| sigma |v_k>
        Complex w{};
        for (int i = 0; i < n; ++i) {
            Complex row{};
            for (int j = 0; j < n; ++j) row += sigma.mat()(i, j) * rho_eig.vectors(j, k);
            w += std::conj(rho_eig.vectors(i, k)) * row;
        }
        const double weight = detail::clip_probability(w.real());
        const double lam = detail::clip_probability(rho_eig.values[k]);
        if (lam <= support_tol) {
            if (weight > support_tol) return kInfiniteDivergence;
            continue;
        }
        tr_sigma_log_rho += weight * std::log2(lam);
    }
    return tr_sigma_log_sigma - tr_sigma_log_rho;
}

}  // namespace densecode
