#pragma once

#include <cmath>
#include <vector>

#include "densecode/complex_matrix.hpp"
#include "densecode/density_matrix.hpp"
#include "densecode/weyl.hpp"

namespace densecode {

/// Normalized state vector.
struct PureState {
    int dim;
    std::vector<Complex> amplitudes;

    PureState(int dim_, std::vector<Complex> amplitudes_)
        : dim(dim_), amplitudes(std::move(amplitudes_)) {
        require(dim > 0 && amplitudes.size() == static_cast<std::size_t>(dim),
                "PureState: amplitude count must equal dim");
        double norm2 = 0.0;
        for (const auto& a : amplitudes) norm2 += std::norm(a);
        require(std::abs(norm2 - 1.0) <= 1e-10, "PureState: not normalized");
    }
};

inline ComplexMatrix projector(const PureState& psi) {
    ComplexMatrix p(psi.dim);
    for (int i = 0; i < psi.dim; ++i)
        for (int j = 0; j < psi.dim; ++j)
            p(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    return p;
}

inline DensityMatrix to_density(const PureState& psi, std::vector<int> dims) {
    return DensityMatrix(projector(psi), std::move(dims));
}

inline Complex inner_product(const PureState& a, const PureState& b) {
    require(a.dim == b.dim, "inner_product: dimension mismatch");
    Complex ip{};
    for (int i = 0; i < a.dim; ++i) ip += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return ip;
}

inline PureState apply_on_side_a(const ComplexMatrix& u, const PureState& psi, int d) {
    require(u.dim() == d && psi.dim == d * d, "apply_on_side_a: dimension mismatch");
    std::vector<Complex> out(psi.dim);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            Complex acc{};
            for (int j = 0; j < d; ++j) acc += u(i, j) * psi.amplitudes[j * d + k];
            out[i * d + k] = acc;
        }
    return PureState(psi.dim, std::move(out));
}

/// |psi_mn> = (V_mn x 1)|psi_00> with |psi_00> = d^{-1/2} sum_j |jj>.
inline PureState bell_state(int d, const WeylIndex& idx) {
    require(idx.d == d, "bell_state: index dimension mismatch");
    validate(idx);
    std::vector<Complex> amp(static_cast<std::size_t>(d) * d);
    const double inv = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) amp[j * d + j] = inv;
    const PureState psi00(d * d, std::move(amp));
    if (idx.m == 0 && idx.n == 0) return psi00;
    return apply_on_side_a(weyl_operator(idx), psi00, d);
}

inline PureState bell_state(int d) { return bell_state(d, WeylIndex{0, 0, d}); }

inline DensityMatrix bell_density(int d, const WeylIndex& idx) {
    return to_density(bell_state(d, idx), {d, d});
}

inline DensityMatrix bell_density(int d) { return bell_density(d, WeylIndex{0, 0, d}); }

/// rho_W = (1-eta)/d^2 1 + eta |psi_00><psi_00|.
inline DensityMatrix werner_state(int d, double eta) {
    require(eta >= 0.0 && eta <= 1.0, "werner_state: eta must lie in [0, 1]");
    ComplexMatrix m = projector(bell_state(d));
    m *= eta;
    const double offset = (1.0 - eta) / (d * d);
    for (int i = 0; i < d * d; ++i) m(i, i) += offset;
    return DensityMatrix(std::move(m), {d, d});
}

/// Two-qubit Schmidt state sqrt(1-alpha)|00> + sqrt(alpha)|11>. The
/// capacity formulas use alpha in [0, 1/2]; alpha in (1/2, 1] is accepted
/// and equivalent to 1 - alpha up to a local swap.
inline PureState schmidt_state(double alpha) {
    require(alpha >= 0.0 && alpha <= 1.0, "schmidt_state: alpha must lie in [0, 1]");
    std::vector<Complex> amp(4);
    amp[0] = std::sqrt(1.0 - alpha);
    amp[3] = std::sqrt(alpha);
    return PureState(4, std::move(amp));
}

inline DensityMatrix schmidt_density(double alpha) {
    return to_density(schmidt_state(alpha), {2, 2});
}

}  // namespace densecode
