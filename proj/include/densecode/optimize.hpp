#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "densecode/capacity.hpp"
#include "densecode/entropy.hpp"
#include "densecode/rng.hpp"

namespace densecode {

namespace detail {

/// Entropy in bits of a Hermitian PSD matrix given directly (no
/// DensityMatrix validation; used in optimizer hot loops).
inline double entropy_of_hermitian(const ComplexMatrix& m) {
    double h = 0.0;
    for (double lam : hermitian_eigenvalues(m, 1e-8).values)
        h -= plog2p(std::max(0.0, lam));
    return h;
}

// chi for fixed post-channel states sigma_i with entropies s_i.
inline double chi_of_weights(const std::vector<ComplexMatrix>& sigmas,
                             const std::vector<double>& entropies,
                             const std::vector<double>& weights) {
    ComplexMatrix avg(sigmas.front().dim());
    double mean_entropy = 0.0;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (weights[i] == 0.0) continue;
        ComplexMatrix term = sigmas[i];
        term *= weights[i];
        avg += term;
        mean_entropy += weights[i] * entropies[i];
    }
    return entropy_of_hermitian(avg) - mean_entropy;
}

// Maximize chi over weight i on [0, 1] by golden-section search, holding
// the relative proportions of the other weights fixed. chi is concave
// along this path, so the section search is globally correct.
inline void ascend_coordinate(const std::vector<ComplexMatrix>& sigmas,
                              const std::vector<double>& entropies, std::vector<double>& weights,
                              std::size_t i) {
    const double rest = 1.0 - weights[i];
    std::vector<double> others(weights.size(), 0.0);
    if (rest > 1e-14) {
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (j != i) others[j] = weights[j] / rest;
    } else {
        const double uniform = 1.0 / static_cast<double>(weights.size() - 1);
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (j != i) others[j] = uniform;
    }
    auto chi_at = [&](double t) {
        std::vector<double> w(weights.size());
        for (std::size_t j = 0; j < weights.size(); ++j)
            w[j] = (j == i) ? t : (1.0 - t) * others[j];
        return chi_of_weights(sigmas, entropies, w);
    };
    constexpr double inv_phi = 0.6180339887498949;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double f1 = chi_at(x1), f2 = chi_at(x2);
    for (int iter = 0; iter < 28; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = chi_at(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = chi_at(x1);
        }
    }
    const double best = 0.5 * (lo + hi);
    for (std::size_t j = 0; j < weights.size(); ++j)
        weights[j] = (j == i) ? best : (1.0 - best) * others[j];
}

inline void ascend_weights(const std::vector<ComplexMatrix>& sigmas,
                           const std::vector<double>& entropies, std::vector<double>& weights,
                           int sweeps) {
    for (int s = 0; s < sweeps; ++s)
        for (std::size_t i = 0; i < weights.size(); ++i)
            ascend_coordinate(sigmas, entropies, weights, i);
    double sum = 0.0;
    for (double w : weights) sum += w;
    for (double& w : weights) w /= sum;
}

// Unitary close to the identity: orthonormalization of 1 + eps * Gaussian.
inline ComplexMatrix small_perturbation(int d, double eps, SeededRng& rng) {
    ComplexMatrix g = ComplexMatrix::identity(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) += eps * rng.complex_gaussian();
    for (int col = 0; col < d; ++col) {
        for (int pass = 0; pass < 2; ++pass)
            for (int prev = 0; prev < col; ++prev) {
                Complex proj{};
                for (int r = 0; r < d; ++r) proj += std::conj(g(r, prev)) * g(r, col);
                for (int r = 0; r < d; ++r) g(r, col) -= proj * g(r, prev);
            }
        double norm2 = 0.0;
        for (int r = 0; r < d; ++r) norm2 += std::norm(g(r, col));
        const double inv = 1.0 / std::sqrt(norm2);
        for (int r = 0; r < d; ++r) g(r, col) *= inv;
    }
    return g;
}

}  // namespace detail

struct OptimizeResult {
    double best_chi;
    EncodingScheme best_scheme;
};

/// Adversarial search for the best unitary-encoding Holevo quantity:
/// random-restart hill climbing over Haar ensembles with simplex
/// coordinate ascent on the probabilities and small-perturbation
/// refinement of the unitaries. Deterministic per (seed, restarts);
/// restart r uses the derived seed splitmix(seed, r) and ties are broken
/// toward the earlier restart.
inline OptimizeResult brute_force_best_encoding(const DensityMatrix& rho,
                                                const BipartiteChannel& ch, int ensemble_size,
                                                int restarts, std::uint64_t seed) {
    require(rho.dims().size() == 2 && rho.dims()[0] == 2,
            "brute_force_best_encoding: supported at d = 2 only");
    const int d = rho.dims()[0];
    require(ensemble_size >= d * d, "brute_force_best_encoding: ensemble_size must be >= d^2");
    require(restarts >= 1, "brute_force_best_encoding: restarts must be >= 1");
    const int db = rho.dims()[1];
    const ComplexMatrix eye_b = ComplexMatrix::identity(db);

    auto channel_output = [&](const ComplexMatrix& u) {
        return apply(ch, sandwich(tensor(u, eye_b), rho.mat()));
    };

    double best_chi = -1.0;
    std::vector<ComplexMatrix> best_unitaries;
    std::vector<double> best_weights;

    for (int r = 0; r < restarts; ++r) {
        SeededRng rng(SeededRng::derive_seed(seed, static_cast<std::uint64_t>(r)));
        std::vector<ComplexMatrix> unitaries;
        std::vector<ComplexMatrix> sigmas;
        std::vector<double> entropies;
        for (int i = 0; i < ensemble_size; ++i) {
            unitaries.push_back(random_unitary(d, rng));
            sigmas.push_back(channel_output(unitaries.back()));
            entropies.push_back(detail::entropy_of_hermitian(sigmas.back()));
        }
        std::vector<double> weights(ensemble_size, 1.0 / ensemble_size);
        detail::ascend_weights(sigmas, entropies, weights, 4);
        double chi = detail::chi_of_weights(sigmas, entropies, weights);

        double eps = 0.2;
        for (int step = 0; step < 80; ++step) {
            const std::size_t j = rng.integer() % unitaries.size();
            const ComplexMatrix candidate =
                detail::small_perturbation(d, eps, rng) * unitaries[j];
            const ComplexMatrix sigma_new = channel_output(candidate);
            const double entropy_new = detail::entropy_of_hermitian(sigma_new);
            const ComplexMatrix sigma_old = std::move(sigmas[j]);
            const double entropy_old = entropies[j];
            sigmas[j] = sigma_new;
            entropies[j] = entropy_new;
            const double chi_new = detail::chi_of_weights(sigmas, entropies, weights);
            if (chi_new > chi) {
                chi = chi_new;
                unitaries[j] = candidate;
            } else {
                sigmas[j] = sigma_old;
                entropies[j] = entropy_old;
                eps *= 0.97;
            }
        }
        detail::ascend_weights(sigmas, entropies, weights, 3);
        chi = detail::chi_of_weights(sigmas, entropies, weights);

        if (chi > best_chi) {
            best_chi = chi;
            best_unitaries = unitaries;
            best_weights = weights;
        }
    }

    EncodingScheme scheme = EncodingScheme::custom(std::move(best_unitaries),
                                                   std::move(best_weights));
    // Report the value recomputed through the validated ensemble path.
    const double chi_checked = holevo(encode_ensemble(scheme, rho, ch));
    return {chi_checked, std::move(scheme)};
}

}  // namespace densecode
