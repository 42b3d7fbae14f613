#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "densecode/channels.hpp"
#include "densecode/entropy.hpp"

namespace densecode {

/// Ensemble {p_i, rho_i} of equal-dimension states.
struct Ensemble {
    std::vector<std::pair<double, DensityMatrix>> members;

    explicit Ensemble(std::vector<std::pair<double, DensityMatrix>> members_)
        : members(std::move(members_)) {
        require(!members.empty(), "Ensemble: empty");
        double sum = 0.0;
        for (const auto& [p, rho] : members) {
            require(p >= 0.0, "Ensemble: negative probability");
            require(rho.dims() == members.front().second.dims(),
                    "Ensemble: members must share dimensions");
            sum += p;
        }
        require(std::abs(sum - 1.0) <= 1e-9, "Ensemble: probabilities must sum to 1");
    }

    DensityMatrix average() const {
        ComplexMatrix avg(members.front().second.dim());
        for (const auto& [p, rho] : members) {
            ComplexMatrix term = rho.mat();
            term *= p;
            avg += term;
        }
        return DensityMatrix(std::move(avg), members.front().second.dims());
    }
};

/// Holevo quantity chi = S(avg) - sum_i p_i S(rho_i), in bits.
inline double holevo(const Ensemble& ens) {
    double chi = von_neumann_entropy(ens.average());
    for (const auto& [p, rho] : ens.members) {
        if (p > 0.0) chi -= p * von_neumann_entropy(rho);
    }
    return chi;
}

/// Noiseless unitary-encoding capacity C = log2 d + S(rho_b) - S(rho)
/// for a bipartite state with equal subsystem dimensions.
inline double capacity_noiseless(const DensityMatrix& rho) {
    require(rho.dims().size() == 2 && rho.dims()[0] == rho.dims()[1],
            "capacity_noiseless: needs equal bipartite dimensions");
    const double sb = von_neumann_entropy(partial_trace(rho, Side::B));
    return std::log2(static_cast<double>(rho.dims()[0])) + sb - von_neumann_entropy(rho);
}

inline DensityMatrix encode_unitary(const ComplexMatrix& u, const DensityMatrix& rho) {
    const int da = rho.dims()[0], db = rho.dims()[1];
    require(u.dim() == da, "encode_unitary: unitary must act on side A");
    return DensityMatrix(sandwich(tensor(u, ComplexMatrix::identity(db)), rho.mat()), rho.dims());
}

/// Sampled check of the entropy condition behind the capacity formula:
/// returns max over Haar-random U of |S(Λ((U⊗1)ρ(U⊗1)†)) - S(Λ(ρ))|.
/// The condition is declared satisfied when the residual is < 1e-6.
inline double check_entropy_condition(const DensityMatrix& rho, const BipartiteChannel& ch,
                                      int samples = 64, std::uint64_t seed = 0x5eed) {
    require(ch.unital(), "check_entropy_condition: channel must be unital");
    require(samples >= 1, "check_entropy_condition: samples must be >= 1");
    const double base = von_neumann_entropy(apply(ch, rho));
    double residual = 0.0;
    for (int s = 0; s < samples; ++s) {
        SeededRng rng(SeededRng::derive_seed(seed, s));
        const ComplexMatrix u = random_unitary(ch.dim_a(), rng);
        const double se = von_neumann_entropy(apply(ch, encode_unitary(u, rho)));
        residual = std::max(residual, std::abs(se - base));
    }
    return residual;
}

inline constexpr double kEntropyConditionTol = 1e-6;

/// Thrown when the sampled entropy condition fails: the formula value is
/// then only an achievable lower bound, not the capacity.
class EntropyConditionError : public std::runtime_error {
public:
    explicit EntropyConditionError(double residual)
        : std::runtime_error("entropy condition violated: residual " + std::to_string(residual) +
                             " exceeds 1e-6; formula is only a lower bound"),
          residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

struct CapacityResult {
    double value;                   // bits
    double average_state_entropy;   // S(rho_tilde)
    double channel_output_entropy;  // S(Lambda(rho))
    double condition_residual;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["value_bits"] = value;
        j["avg_state_entropy_bits"] = average_state_entropy;
        j["channel_output_entropy_bits"] = channel_output_entropy;
        j["condition_residual"] = condition_residual;
        return j;
    }
};

/// Average state of the equally-weighted Weyl-encoded ensemble after the
/// channel: rho_tilde = Λ(1/d ⊗ rho_b) = 1/d ⊗ Λ_b(rho_b).
inline DensityMatrix average_encoded_state(const DensityMatrix& rho, const BipartiteChannel& ch) {
    const int da = rho.dims()[0];
    const DensityMatrix rho_b = partial_trace(rho, Side::B);
    ComplexMatrix avg_in = tensor(ComplexMatrix::identity(da), rho_b.mat());
    avg_in *= 1.0 / da;
    return apply(ch, DensityMatrix(std::move(avg_in), rho.dims()));
}

/// Capacity C = S(rho_tilde) - S(Λ(rho)) for a unital channel, valid when
/// the sampled entropy condition holds; otherwise throws
/// EntropyConditionError carrying the residual.
inline CapacityResult capacity_unital(const DensityMatrix& rho, const BipartiteChannel& ch,
                                      int samples = 64, std::uint64_t seed = 0x5eed) {
    require(rho.dims().size() == 2 && rho.dims()[0] == rho.dims()[1],
            "capacity_unital: needs equal bipartite dimensions");
    require(ch.unital(), "capacity_unital: channel must be unital");
    const double residual = check_entropy_condition(rho, ch, samples, seed);
    if (residual >= kEntropyConditionTol) throw EntropyConditionError(residual);
    const double s_avg = von_neumann_entropy(average_encoded_state(rho, ch));
    const double s_out = von_neumann_entropy(apply(ch, rho));
    return {s_avg - s_out, s_avg, s_out, residual};
}

/// Eq. (27): C = log2 d^2 - H({q_mn}) for a Bell state through a
/// one-sided Pauli channel.
inline double capacity_bell_one_sided_pauli(const PauliSpec& spec) {
    require(!spec.is_joint(), "capacity_bell_one_sided_pauli: needs a one-sided table");
    return 2.0 * std::log2(static_cast<double>(spec.d())) - shannon_entropy(spec.table());
}

/// Werner-state capacity: C = log2 d^2 - H({(1-eta)/d^2 + eta q_mn}).
inline double capacity_werner_one_sided_pauli(int d, double eta, const PauliSpec& spec) {
    require(!spec.is_joint(), "capacity_werner_one_sided_pauli: needs a one-sided table");
    require(spec.d() == d, "capacity_werner_one_sided_pauli: dimension mismatch");
    require(eta >= 0.0 && eta <= 1.0, "capacity_werner_one_sided_pauli: eta must lie in [0, 1]");
    std::vector<double> probs;
    probs.reserve(spec.table().size());
    const double offset = (1.0 - eta) / (d * d);
    for (double q : spec.table()) probs.push_back(offset + eta * q);
    return 2.0 * std::log2(static_cast<double>(d)) - shannon_entropy(probs);
}

/// Closed-form spectra of the two-sided qubit depolarizing channel on the
/// Schmidt state |phi_alpha>: gamma for the joint output, xi for Bob's
/// reduced output.
struct AlphaSpectra {
    std::array<double, 4> gamma;
    std::array<double, 2> xi;
};

inline AlphaSpectra alpha_channel_spectra(double alpha, double p) {
    require(alpha >= 0.0 && alpha <= 0.5, "alpha_channel_spectra: alpha must lie in [0, 1/2]");
    require(p >= 0.0 && p <= 1.0, "alpha_channel_spectra: p must lie in [0, 1]");
    const double disc = std::max(0.0, 1.0 - 4.0 * p * alpha * (2.0 - p) * (1.0 - alpha));
    const double spread = (1.0 - p) * std::sqrt(disc);
    const double mid = 1.0 - p * (1.0 - 0.5 * p);
    const double g3 = 0.5 * p * (1.0 - 0.5 * p);
    const double x1 = alpha - p * alpha + 0.5 * p;
    return {{0.5 * (mid + spread), 0.5 * (mid - spread), g3, g3}, {x1, 1.0 - x1}};
}

/// Eq. (40): capacity of |phi_alpha> through the two-sided qubit
/// depolarizing channel.
inline double capacity_alpha(double alpha, double p) {
    const AlphaSpectra s = alpha_channel_spectra(alpha, p);
    double c = 1.0;
    for (double xi : s.xi) c -= detail::plog2p(xi);
    for (double g : s.gamma) c += detail::plog2p(g);
    return c;
}

/// Eq. (42): Bell-state capacity for the two-sided qubit depolarizing
/// channel.
inline double capacity_bell_two_sided_dep2(double p) {
    require(p >= 0.0 && p <= 1.0, "capacity_bell_two_sided_dep2: p must lie in [0, 1]");
    const double one = (1.0 + 3.0 * (1.0 - p) * (1.0 - p)) / 4.0;
    const double rest = (1.0 - (1.0 - p) * (1.0 - p)) / 4.0;
    return 2.0 + detail::plog2p(one) + 3.0 * detail::plog2p(rest);
}

/// Eq. (43): product-state capacity, identical to the classical capacity
/// of the qubit depolarizing channel.
inline double classical_dep2_capacity(double p) {
    require(p >= 0.0 && p <= 1.0, "classical_dep2_capacity: p must lie in [0, 1]");
    return 1.0 + detail::plog2p(0.5 * p) + detail::plog2p(0.5 * (2.0 - p));
}

/// Eq. (52): Bell-state capacity for the one-sided qubit depolarizing
/// channel.
inline double capacity_bell_one_sided_dep2(double p) {
    require(p >= 0.0 && p <= 1.0, "capacity_bell_one_sided_dep2: p must lie in [0, 1]");
    return 2.0 + detail::plog2p(0.25 * (4.0 - 3.0 * p)) + 3.0 * detail::plog2p(0.25 * p);
}

enum class EncodingKind { UnitaryWeyl, UnitaryCustom, Preprocessed };

/// Encoding of the resource state: unitaries {W_i} with probabilities,
/// optionally preceded by an Alice-side pre-processing map.
struct EncodingScheme {
    EncodingKind kind;
    std::vector<ComplexMatrix> unitaries;
    std::vector<double> probabilities;
    std::optional<KrausChannel> pre_map;

    static EncodingScheme weyl(int d) {
        EncodingScheme s{EncodingKind::UnitaryWeyl, weyl_family(d),
                         std::vector<double>(static_cast<std::size_t>(d) * d, 1.0 / (d * d)),
                         std::nullopt};
        return s;
    }

    static EncodingScheme custom(std::vector<ComplexMatrix> unitaries,
                                 std::vector<double> probabilities) {
        require(unitaries.size() == probabilities.size(),
                "EncodingScheme: one probability per unitary");
        return {EncodingKind::UnitaryCustom, std::move(unitaries), std::move(probabilities),
                std::nullopt};
    }

    /// Fixed Alice-side pre-processing followed by the uniform Weyl
    /// encoding (the Lemma-5 achieving ensemble).
    static EncodingScheme preprocessed(int d, KrausChannel pre) {
        require(pre.local_dim == d, "EncodingScheme: pre-map must act on side A");
        EncodingScheme s = weyl(d);
        s.kind = EncodingKind::Preprocessed;
        s.pre_map = std::move(pre);
        return s;
    }
};

/// Post-channel ensemble {p_i, Λ((W_i ⊗ 1) Γ(ρ) (W_i ⊗ 1)†)}.
inline Ensemble encode_ensemble(const EncodingScheme& scheme, const DensityMatrix& rho,
                                const BipartiteChannel& ch) {
    DensityMatrix base = rho;
    if (scheme.pre_map) base = apply(lift(*scheme.pre_map, Side::A, rho.dims()[1]), rho);
    std::vector<std::pair<double, DensityMatrix>> members;
    members.reserve(scheme.unitaries.size());
    for (std::size_t i = 0; i < scheme.unitaries.size(); ++i)
        members.emplace_back(scheme.probabilities[i],
                             apply(ch, encode_unitary(scheme.unitaries[i], base)));
    return Ensemble(std::move(members));
}

}  // namespace densecode
