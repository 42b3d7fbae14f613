#pragma once

#include <cstddef>
#include <vector>

#include "densecode/capacity.hpp"
#include "densecode/channels.hpp"

namespace densecode {

namespace detail {

inline bool acts_as_identity(const KrausChannel& ch) {
    const int d = ch.local_dim;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ComplexMatrix unit(d);
            unit(i, j) = 1.0;
            if (max_abs_diff(apply(ch, unit), unit) > 1e-12) return false;
        }
    return true;
}

}  // namespace detail

/// Computational-basis measurement with outcome-conditioned relabeling to
/// |0>: Kraus {|0><k|}. This is the CPTP form of "project onto |00> or
/// |11> and proceed with the outcome"; plain dephasing (Kraus {|k><k|})
/// keeps the outcome mixture and does not reach the product-state value.
inline KrausChannel measurement_preprocessing(int d) {
    std::vector<ComplexMatrix> ops;
    ops.reserve(d);
    for (int k = 0; k < d; ++k) {
        ComplexMatrix m(d);
        m(0, k) = 1.0;
        ops.push_back(std::move(m));
    }
    return KrausChannel(d, std::move(ops));
}

/// Identity, then V_mn ∘ measurement for every (m, n) in flat order
/// ((0,0) is the plain measurement).
inline std::vector<KrausChannel> builtin_preprocessing_candidates(int d) {
    std::vector<KrausChannel> out;
    out.push_back(KrausChannel::identity(d));
    const KrausChannel meas = measurement_preprocessing(d);
    for (int i = 0; i < d * d; ++i) {
        const ComplexMatrix v = weyl_operator(weyl_index_from_flat(i, d));
        std::vector<ComplexMatrix> ops;
        ops.reserve(meas.kraus_ops.size());
        for (const auto& k : meas.kraus_ops) ops.push_back(v * k);
        out.push_back(KrausChannel(d, std::move(ops)));
    }
    return out;
}

struct PreprocessingResult {
    double value;         // bits
    std::size_t chosen;   // index into the candidate list
    std::vector<double> output_entropies;  // S(Λ(Γ_k(ρ))) per candidate
};

/// Lemma-5 capacity with pre-processing over a finite candidate set:
/// value = log2 d + S(Λ_b(ρ_b)) - min_k S(Λ(Γ_k(ρ))). The channel must be
/// a (possibly correlated) two-sided Pauli channel and the candidate set
/// must contain the identity map, which makes the result at least the
/// plain unitary-encoding value.
inline PreprocessingResult preprocessing_capacity(const DensityMatrix& rho,
                                                  const BipartiteChannel& ch,
                                                  const std::vector<KrausChannel>& candidates) {
    require(ch.pauli_table().has_value(),
            "preprocessing_capacity: channel must be a two-sided Pauli channel");
    require(rho.dims().size() == 2 && rho.dims()[0] == ch.dim_a() && rho.dims()[1] == ch.dim_b(),
            "preprocessing_capacity: state/channel mismatch");
    bool has_identity = false;
    for (const auto& g : candidates) {
        require(g.local_dim == ch.dim_a(), "preprocessing_capacity: candidate must act on side A");
        if (detail::acts_as_identity(g)) has_identity = true;
    }
    require(has_identity, "preprocessing_capacity: candidate set must include the identity map");

    const double s_avg = von_neumann_entropy(average_encoded_state(rho, ch));

    std::vector<double> entropies;
    entropies.reserve(candidates.size());
    for (const auto& g : candidates) {
        const DensityMatrix pre = apply(lift(g, Side::A, ch.dim_b()), rho);
        entropies.push_back(von_neumann_entropy(apply(ch, pre)));
    }
    std::size_t chosen = 0;
    for (std::size_t k = 1; k < entropies.size(); ++k)
        if (entropies[k] < entropies[chosen] - 1e-9) chosen = k;
    return {s_avg - entropies[chosen], chosen, std::move(entropies)};
}

inline PreprocessingResult preprocessing_capacity(const DensityMatrix& rho,
                                                  const BipartiteChannel& ch) {
    return preprocessing_capacity(rho, ch, builtin_preprocessing_candidates(ch.dim_a()));
}

}  // namespace densecode
