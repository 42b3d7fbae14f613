#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "densecode/analysis.hpp"
#include "densecode/capacity.hpp"
#include "densecode/channels.hpp"
#include "densecode/entropy.hpp"
#include "densecode/optimize.hpp"
#include "densecode/preprocessing.hpp"
#include "densecode/rng.hpp"
#include "densecode/states.hpp"
#include "densecode/weyl.hpp"

namespace densecode {

/// One registered property: `run` returns the worst residual observed;
/// the property passes when residual < tolerance.
struct PropertyCheck {
    std::string module;
    std::string name;
    double tolerance;
    std::function<double(std::uint64_t seed)> run;
};

struct PropertyReport {
    std::string module;
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

namespace checks {

inline ComplexMatrix phase_times(double angle, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    out *= Complex(std::cos(angle), std::sin(angle));
    return out;
}

// V_mn V_m'n' = exp(2 pi i n'm / d) V_{m+m', n+n'} for all pairs, d <= 5.
inline double weyl_group_law(std::uint64_t) {
    double worst = 0.0;
    for (int d = 2; d <= 5; ++d) {
        const auto family = weyl_family(d);
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
                for (int mt = 0; mt < d; ++mt)
                    for (int nt = 0; nt < d; ++nt) {
                        const ComplexMatrix lhs = family[m * d + n] * family[mt * d + nt];
                        const double angle = 2.0 * std::numbers::pi * nt * m / d;
                        const ComplexMatrix rhs = phase_times(
                            angle, family[((m + mt) % d) * d + (n + nt) % d]);
                        worst = std::max(worst, max_abs_diff(lhs, rhs));
                    }
    }
    return worst;
}

// <psi_00|(U† V_mn† V_m'n' U ⊗ 1)|psi_00> = 0 for (m,n) != (m',n').
inline double appendix_b_inner_product(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto family = weyl_family(d);
        const PureState psi = bell_state(d);
        for (int trial = 0; trial < 50; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 100 * d + trial));
            const ComplexMatrix u = random_unitary(d, rng);
            for (int a = 0; a < d * d; ++a)
                for (int b = 0; b < d * d; ++b) {
                    if (a == b) continue;
                    const ComplexMatrix op = u.adjoint() * family[a].adjoint() * family[b] * u;
                    const PureState mapped = apply_on_side_a(op, psi, d);
                    worst = std::max(worst, std::abs(inner_product(psi, mapped)));
                }
        }
    }
    return worst;
}

// pi_mn pi_m'n' = 0 for distinct index pairs (Lemma 3).
inline double lemma3_orthogonality(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const ComplexMatrix rho00 = projector(bell_state(d));
        const ComplexMatrix eye = ComplexMatrix::identity(d);
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 500 * d + trial));
            const ComplexMatrix u = random_unitary(d, rng);
            std::vector<ComplexMatrix> projectors;
            for (int i = 0; i < d * d; ++i) {
                const ComplexMatrix vu = weyl_operator(weyl_index_from_flat(i, d)) * u;
                projectors.push_back(sandwich(tensor(vu, eye), rho00));
            }
            for (int a = 0; a < d * d; ++a)
                for (int b = 0; b < d * d; ++b) {
                    if (a == b) continue;
                    worst = std::max(worst, (projectors[a] * projectors[b]).max_abs());
                }
        }
    }
    return worst;
}

// (1/d^2) sum_i (V_i ⊗ 1) rho (V_i† ⊗ 1) = 1/d ⊗ rho_b.
inline double weyl_twirl_average(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto family = weyl_family(d);
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 900 * d + trial));
            const DensityMatrix rho = random_density_matrix({d, d}, rng);
            ComplexMatrix avg(d * d);
            const ComplexMatrix eye = ComplexMatrix::identity(d);
            for (const auto& v : family) avg += sandwich(tensor(v, eye), rho.mat());
            avg *= 1.0 / (d * d);
            ComplexMatrix expected =
                tensor(ComplexMatrix::identity(d), partial_trace(rho, Side::B).mat());
            expected *= 1.0 / d;
            worst = std::max(worst, max_abs_diff(avg, expected));
        }
    }
    return worst;
}

// Appendix A: Λ_dep(U λ_i U†) = (1-p) U λ_i U†.
inline double appendix_a_identity(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto gens = su_generators(d);
        for (double p : {0.3, 0.7}) {
            const KrausChannel dep = pauli_channel(depolarizing_spec(d, p));
            for (int trial = 0; trial < 20; ++trial) {
                SeededRng rng(SeededRng::derive_seed(seed, 40 * d + trial));
                const ComplexMatrix u = random_unitary(d, rng);
                for (const auto& lam : gens) {
                    const ComplexMatrix rotated = sandwich(u, lam);
                    ComplexMatrix expected = rotated;
                    expected *= 1.0 - p;
                    worst = std::max(worst, max_abs_diff(apply(dep, rotated), expected));
                }
            }
        }
    }
    return worst;
}

// Λ_dep(λ_i) = (1-p) λ_i for every generator.
inline double dep_generator_scaling(std::uint64_t) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto gens = su_generators(d);
        for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const KrausChannel dep = pauli_channel(depolarizing_spec(d, p));
            for (const auto& lam : gens) {
                ComplexMatrix expected = lam;
                expected *= 1.0 - p;
                worst = std::max(worst, max_abs_diff(apply(dep, lam), expected));
            }
        }
    }
    return worst;
}

// Random mixed-unitary channel on one side.
inline KrausChannel random_unitary_mixture(int d, int terms, SeededRng& rng) {
    const std::vector<double> w = random_probabilities(terms, rng);
    std::vector<ComplexMatrix> ops;
    for (int j = 0; j < terms; ++j) {
        ComplexMatrix u = random_unitary(d, rng);
        u *= std::sqrt(w[j]);
        ops.push_back(std::move(u));
    }
    return KrausChannel(d, std::move(ops));
}

struct RandomUnitalSetup {
    KrausChannel channel_a;
    KrausChannel channel_b;
    BipartiteChannel channel_ab;
    DensityMatrix rho;

    RandomUnitalSetup(int d, SeededRng& rng)
        : channel_a(random_unitary_mixture(d, 3, rng)),
          channel_b(random_unitary_mixture(d, 3, rng)),
          channel_ab(compose(lift(channel_a, Side::A, d), lift(channel_b, Side::B, d))),
          rho(random_density_matrix({d, d}, rng)) {}
};

// Lemma 1-a: ensemble average after {V_i, 1/d^2} encoding and any unital
// channel is 1 ⊗ Λ_b(rho_b / d).
inline double lemma1a_average_state(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        const auto family = weyl_family(d);
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 60 * d + trial));
            const RandomUnitalSetup setup(d, rng);
            ComplexMatrix avg(d * d);
            const ComplexMatrix eye = ComplexMatrix::identity(d);
            for (const auto& v : family)
                avg += apply(setup.channel_ab, sandwich(tensor(v, eye), setup.rho.mat()));
            avg *= 1.0 / (d * d);
            ComplexMatrix expected = tensor(
                ComplexMatrix::identity(d),
                apply(setup.channel_b, partial_trace(setup.rho, Side::B).mat()));
            expected *= 1.0 / d;
            worst = std::max(worst, max_abs_diff(avg, expected));
            worst = std::max(
                worst, max_abs_diff(avg, average_encoded_state(setup.rho, setup.channel_ab).mat()));
        }
    }
    return worst;
}

// Lemma 1-b: tr(Λ_ab(tau) log rho_tilde) = -S(rho_tilde).
inline double lemma1b_trace_identity(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 70 * d + trial));
            const RandomUnitalSetup setup(d, rng);
            const ComplexMatrix u = random_unitary(d, rng);
            const DensityMatrix tau = encode_unitary(u, setup.rho);
            const DensityMatrix out = apply(setup.channel_ab, tau);
            const DensityMatrix rho_tilde = average_encoded_state(setup.rho, setup.channel_ab);

            const EigenSystem eig = hermitian_eigensystem(rho_tilde.mat());
            double lhs = 0.0;
            for (int k = 0; k < rho_tilde.dim(); ++k) {
                Complex w{};
                for (int i = 0; i < rho_tilde.dim(); ++i) {
                    Complex row{};
                    for (int j = 0; j < rho_tilde.dim(); ++j)
                        row += out.mat()(i, j) * eig.vectors(j, k);
                    w += std::conj(eig.vectors(i, k)) * row;
                }
                const double lam = std::max(eig.values[k], 0.0);
                if (lam > 1e-15) lhs += w.real() * std::log2(lam);
            }
            worst = std::max(worst, std::abs(lhs + von_neumann_entropy(rho_tilde)));
        }
    }
    return worst;
}

// Linearity: Λ(sum_k p_k rho_k) = sum_k p_k Λ(rho_k).
inline double channel_linearity(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 80 * d + trial));
            const RandomUnitalSetup setup(d, rng);
            const std::vector<double> w = random_probabilities(3, rng);
            ComplexMatrix mix(d * d);
            ComplexMatrix sum(d * d);
            for (int k = 0; k < 3; ++k) {
                const DensityMatrix rho_k = random_density_matrix({d, d}, rng);
                ComplexMatrix term = rho_k.mat();
                term *= w[k];
                mix += term;
                ComplexMatrix mapped = apply(setup.channel_ab, rho_k.mat());
                mapped *= w[k];
                sum += mapped;
            }
            worst = std::max(worst, max_abs_diff(apply(setup.channel_ab, mix), sum));
        }
    }
    return worst;
}

// Lemma 1-c: S(Λ_ab(tau) || rho_tilde) = S(rho_tilde) - S(Λ_ab(tau)).
inline double lemma1c_relative_entropy(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, 110 * d + trial));
            const RandomUnitalSetup setup(d, rng);
            const ComplexMatrix u = random_unitary(d, rng);
            const DensityMatrix out = apply(setup.channel_ab, encode_unitary(u, setup.rho));
            const DensityMatrix rho_tilde = average_encoded_state(setup.rho, setup.channel_ab);
            const double lhs = relative_entropy(out, rho_tilde);
            const double rhs = von_neumann_entropy(rho_tilde) - von_neumann_entropy(out);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

// Lemma 4 covariance of the two-sided depolarizing channel.
inline double lemma4_covariance(std::uint64_t seed) {
    double worst = 0.0;
    for (int d = 2; d <= 3; ++d)
        for (double p : {0.25, 0.5, 0.9}) {
            const auto report =
                verify_covariance(two_sided_depolarizing(d, p), 20, SeededRng::derive_seed(seed, d * 7 + static_cast<std::uint64_t>(p * 100)));
            worst = std::max(worst, report.max_residual);
        }
    return worst;
}

// Lemma 2: no unitary ensemble beats the closed-form capacity.
inline double lemma2_dominance(std::uint64_t seed) {
    const DensityMatrix bell = bell_density(2);
    double worst = 0.0;
    for (double p : {0.1, 0.5, 0.9}) {
        const BipartiteChannel ch = one_sided_depolarizing(2, p);
        const double cap = capacity_bell_one_sided_dep2(p);
        for (int trial = 0; trial < 200; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, static_cast<std::uint64_t>(p * 1000) + trial));
            std::vector<ComplexMatrix> unitaries;
            for (int i = 0; i < 4; ++i) unitaries.push_back(random_unitary(2, rng));
            const EncodingScheme scheme =
                EncodingScheme::custom(std::move(unitaries), random_probabilities(4, rng));
            const double chi = holevo(encode_ensemble(scheme, bell, ch));
            worst = std::max(worst, chi - cap);
        }
    }
    return std::max(worst, 0.0);
}

// capacity_alpha agrees with the general unital path on a 21x21 grid.
inline double cross_path_consistency(std::uint64_t seed) {
    double worst = 0.0;
    for (int ia = 0; ia <= 20; ++ia)
        for (int ip = 0; ip <= 20; ++ip) {
            const double alpha = 0.5 * ia / 20.0;
            const double p = static_cast<double>(ip) / 20.0;
            const CapacityResult r =
                capacity_unital(schmidt_density(alpha), two_sided_depolarizing(2, p), 16, seed);
            worst = std::max(worst, std::abs(r.value - capacity_alpha(alpha, p)));
        }
    return worst;
}

// Diagonalized two-sided dep2 output matches {gamma_i} on the grid.
inline double gamma_spectrum_match(std::uint64_t) {
    double worst = 0.0;
    for (int ia = 0; ia <= 20; ++ia)
        for (int ip = 0; ip <= 20; ++ip) {
            const double alpha = 0.5 * ia / 20.0;
            const double p = static_cast<double>(ip) / 20.0;
            const DensityMatrix out =
                apply(two_sided_depolarizing(2, p), schmidt_density(alpha));
            const auto spec = hermitian_eigenvalues(out.mat());
            auto gammas = alpha_channel_spectra(alpha, p).gamma;
            std::sort(gammas.begin(), gammas.end(), std::greater<>());
            for (int k = 0; k < 4; ++k)
                worst = std::max(worst, std::abs(spec.values[k] - gammas[k]));
        }
    return worst;
}

// Bob's reduced output matches {xi_s} on the grid.
inline double xi_spectrum_match(std::uint64_t) {
    double worst = 0.0;
    for (int ia = 0; ia <= 20; ++ia)
        for (int ip = 0; ip <= 20; ++ip) {
            const double alpha = 0.5 * ia / 20.0;
            const double p = static_cast<double>(ip) / 20.0;
            const DensityMatrix out =
                apply(two_sided_depolarizing(2, p), schmidt_density(alpha));
            const auto spec = hermitian_eigenvalues(partial_trace(out, Side::B).mat());
            auto xis = alpha_channel_spectra(alpha, p).xi;
            std::sort(xis.begin(), xis.end(), std::greater<>());
            for (int k = 0; k < 2; ++k)
                worst = std::max(worst, std::abs(spec.values[k] - xis[k]));
        }
    return worst;
}

// Two-sided dep capacity is invariant under local unitaries on the input.
inline double local_unitary_invariance(std::uint64_t seed) {
    double worst = 0.0;
    for (double p : {0.2, 0.6}) {
        const BipartiteChannel ch = two_sided_depolarizing(2, p);
        for (int trial = 0; trial < 20; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, static_cast<std::uint64_t>(p * 100) + trial));
            const DensityMatrix rho = random_density_matrix({2, 2}, rng);
            const ComplexMatrix u = tensor(random_unitary(2, rng), random_unitary(2, rng));
            const DensityMatrix rotated = DensityMatrix(sandwich(u, rho.mat()), rho.dims());
            const double c0 = capacity_unital(rho, ch, 16, seed).value;
            const double c1 = capacity_unital(rotated, ch, 16, seed).value;
            worst = std::max(worst, std::abs(c0 - c1));
        }
    }
    return worst;
}

// Mixed resource states never beat the best pure-state capacity.
inline double mixed_state_bound(std::uint64_t seed) {
    double worst = 0.0;
    for (double p : {0.2, 0.5}) {
        const BipartiteChannel ch = two_sided_depolarizing(2, p);
        const double bound = std::max(capacity_alpha(0.5, p), capacity_alpha(0.0, p));
        for (int trial = 0; trial < 100; ++trial) {
            SeededRng rng(SeededRng::derive_seed(seed, static_cast<std::uint64_t>(p * 10) + trial));
            const DensityMatrix rho = random_density_matrix({2, 2}, rng);
            worst = std::max(worst, capacity_unital(rho, ch, 16, seed).value - bound);
        }
    }
    return std::max(worst, 0.0);
}

// Pre-processing with the identity candidate included never hurts.
inline double preprocessing_never_hurts(std::uint64_t seed) {
    double worst = 0.0;
    const DensityMatrix bell = bell_density(2);
    const auto candidates = builtin_preprocessing_candidates(2);
    for (int ip = 0; ip <= 10; ++ip) {
        const double p = ip / 10.0;
        const BipartiteChannel ch = two_sided_depolarizing(2, p);
        const double plain = capacity_unital(bell, ch, 16, seed).value;
        const double pre = preprocessing_capacity(bell, ch, candidates).value;
        worst = std::max(worst, plain - pre);
    }
    for (int trial = 0; trial < 10; ++trial) {
        SeededRng rng(SeededRng::derive_seed(seed, 3000 + trial));
        const DensityMatrix rho = random_density_matrix({2, 2}, rng);
        const BipartiteChannel ch = two_sided_depolarizing(2, 0.3);
        const double plain = capacity_unital(rho, ch, 16, seed).value;
        const double pre = preprocessing_capacity(rho, ch, candidates).value;
        worst = std::max(worst, plain - pre);
    }
    return std::max(worst, 0.0);
}

// Both root finders converge to tight brackets with small residuals.
inline double bisection_convergence(std::uint64_t) {
    double worst = 0.0;
    for (const RootReport& r : {find_threshold_alpha(), find_classical_limit_crossing()}) {
        worst = std::max(worst, r.residual / 1e-9);
        worst = std::max(worst, (r.bracket.second - r.bracket.first) / 1e-10);
        worst = std::max(worst, r.iterations / 60.0);
        if (r.root < r.bracket.first || r.root > r.bracket.second) worst = std::max(worst, 2.0);
    }
    return worst;  // normalized: pass iff < 1
}

// Every sweep value is finite and inside [0, 2].
inline double sweep_series_bounded(std::uint64_t) {
    double worst = 0.0;
    const auto grid = default_p_grid();
    for (const SweepResult& sweep :
         {sweep_figure3(grid), sweep_figure4(grid), sweep_figure5(grid)}) {
        for (const auto& [name, values] : sweep.series)
            for (double v : values) {
                if (!std::isfinite(v)) return 1e9;
                worst = std::max(worst, std::max(-v, v - 2.0));
            }
    }
    return std::max(worst, 0.0);
}

// Bell capacities are non-increasing in the noise parameter.
inline double capacity_monotonicity(std::uint64_t) {
    const auto grid = default_p_grid();
    double worst = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        worst = std::max(worst, capacity_bell_one_sided_dep2(grid[i]) -
                                    capacity_bell_one_sided_dep2(grid[i - 1]));
        worst = std::max(worst, capacity_bell_two_sided_dep2(grid[i]) -
                                    capacity_bell_two_sided_dep2(grid[i - 1]));
    }
    return std::max(worst, 0.0);
}

}  // namespace checks

/// The registered property suite. Counts per module are pinned by a test:
/// qops 4, channels 7, dense-coding 7, analysis 3.
inline const std::vector<PropertyCheck>& property_registry() {
    static const std::vector<PropertyCheck> registry = {
        {"qops", "weyl_group_law", 1e-10, checks::weyl_group_law},
        {"qops", "appendix_b_inner_product", 1e-9, checks::appendix_b_inner_product},
        {"qops", "lemma3_orthogonality", 1e-9, checks::lemma3_orthogonality},
        {"qops", "weyl_twirl_average", 1e-9, checks::weyl_twirl_average},
        {"channels", "appendix_a_identity", 1e-9, checks::appendix_a_identity},
        {"channels", "dep_generator_scaling", 1e-9, checks::dep_generator_scaling},
        {"channels", "lemma1a_average_state", 1e-9, checks::lemma1a_average_state},
        {"channels", "lemma1b_trace_identity", 1e-7, checks::lemma1b_trace_identity},
        {"channels", "channel_linearity", 1e-10, checks::channel_linearity},
        {"channels", "lemma1c_relative_entropy", 1e-7, checks::lemma1c_relative_entropy},
        {"channels", "lemma4_covariance", 1e-9, checks::lemma4_covariance},
        {"dense-coding", "lemma2_dominance", 1e-7, checks::lemma2_dominance},
        {"dense-coding", "cross_path_consistency", 1e-8, checks::cross_path_consistency},
        {"dense-coding", "gamma_spectrum_match", 1e-9, checks::gamma_spectrum_match},
        {"dense-coding", "xi_spectrum_match", 1e-10, checks::xi_spectrum_match},
        {"dense-coding", "local_unitary_invariance", 1e-8, checks::local_unitary_invariance},
        {"dense-coding", "mixed_state_bound", 1e-7, checks::mixed_state_bound},
        {"dense-coding", "preprocessing_never_hurts", 1e-9, checks::preprocessing_never_hurts},
        {"analysis", "bisection_convergence", 1.0, checks::bisection_convergence},
        {"analysis", "sweep_series_bounded", 1e-12, checks::sweep_series_bounded},
        {"analysis", "capacity_monotonicity", 1e-12, checks::capacity_monotonicity},
    };
    return registry;
}

inline std::vector<PropertyReport> run_property_suite(std::uint64_t seed) {
    std::vector<PropertyReport> reports;
    reports.reserve(property_registry().size());
    for (const auto& check : property_registry()) {
        const double residual = check.run(seed);
        reports.push_back(
            {check.module, check.name, residual, check.tolerance, residual < check.tolerance});
    }
    return reports;
}

}  // namespace densecode
