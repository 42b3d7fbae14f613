#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "densecode/complex_matrix.hpp"
#include "densecode/density_matrix.hpp"
#include "densecode/states.hpp"

namespace densecode {

/// Deterministic random source. mt19937_64 output is fixed by the
/// standard and the Gaussian is a hand-rolled Box-Muller, so a seed
/// reproduces the same stream on every platform (std::*_distribution
/// would not).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return (engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer() { return engine_(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Complex complex_gaussian() {
        const double re = gaussian();
        return Complex(re, gaussian());
    }

    /// Independent substream for restart/trial `index`, via splitmix64.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Gaussian matrix by modified
/// Gram-Schmidt with a re-orthogonalization pass. Positive diagonal of R
/// is the unique QR convention under which Q is Haar.
inline ComplexMatrix random_unitary(int d, SeededRng& rng) {
    require(d >= 1, "random_unitary: d must be >= 1");
    ComplexMatrix g(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();

    for (int col = 0; col < d; ++col) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < col; ++prev) {
                Complex proj{};
                for (int r = 0; r < d; ++r) proj += std::conj(g(r, prev)) * g(r, col);
                for (int r = 0; r < d; ++r) g(r, col) -= proj * g(r, prev);
            }
        }
        double norm2 = 0.0;
        for (int r = 0; r < d; ++r) norm2 += std::norm(g(r, col));
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < d; ++r) g(r, col) *= inv;
    }
    return g;
}

inline ComplexMatrix random_unitary(int d, std::uint64_t seed) {
    SeededRng rng(seed);
    return random_unitary(d, rng);
}

inline PureState random_pure_state(int dim, SeededRng& rng) {
    std::vector<Complex> amp(dim);
    double norm2 = 0.0;
    for (auto& a : amp) {
        a = rng.complex_gaussian();
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amp) a *= inv;
    return PureState(dim, std::move(amp));
}

/// Full-rank random state: normalized Wishart G G†.
inline DensityMatrix random_density_matrix(const std::vector<int>& dims, SeededRng& rng) {
    int dim = 1;
    for (int d : dims) dim *= d;
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_gaussian();
    ComplexMatrix w = g * g.adjoint();
    w *= 1.0 / w.trace().real();
    // Symmetrize away the last bits of roundoff.
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = 0.5 * (w(i, j) + std::conj(w(j, i)));
    return DensityMatrix(std::move(m), dims);
}

/// Random probability vector from normalized exponentials.
inline std::vector<double> random_probabilities(int n, SeededRng& rng) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& x : p) {
        double u = rng.uniform();
        while (u <= 0.0) u = rng.uniform();
        x = -std::log(u);
        sum += x;
    }
    for (auto& x : p) x /= sum;
    return p;
}

}  // namespace densecode
