#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "densecode/complex_matrix.hpp"
#include "densecode/density_matrix.hpp"
#include "densecode/pauli_spec.hpp"
#include "densecode/rng.hpp"
#include "densecode/weyl.hpp"

namespace densecode {

inline constexpr double kChannelTol = 1e-9;

/// Kraus channel on a single subsystem. Trace preservation (sum K†K = 1)
/// is enforced; the unital flag records whether sum K K† = 1 as well.
struct KrausChannel {
    int local_dim;
    std::vector<ComplexMatrix> kraus_ops;
    bool unital;

    KrausChannel(int local_dim_, std::vector<ComplexMatrix> ops)
        : local_dim(local_dim_), kraus_ops(std::move(ops)), unital(false) {
        require(!kraus_ops.empty(), "KrausChannel: needs at least one Kraus operator");
        ComplexMatrix tp = ComplexMatrix::zero(local_dim);
        ComplexMatrix un = ComplexMatrix::zero(local_dim);
        for (const auto& k : kraus_ops) {
            require(k.dim() == local_dim, "KrausChannel: Kraus operator dimension mismatch");
            tp += k.adjoint() * k;
            un += k * k.adjoint();
        }
        require(max_abs_diff(tp, ComplexMatrix::identity(local_dim)) <= kChannelTol,
                "KrausChannel: not trace preserving");
        unital = max_abs_diff(un, ComplexMatrix::identity(local_dim)) <= kChannelTol;
    }

    static KrausChannel identity(int d) {
        return KrausChannel(d, {ComplexMatrix::identity(d)});
    }
};

inline ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& m) {
    require(m.dim() == ch.local_dim, "apply: dimension mismatch");
    ComplexMatrix out(m.dim());
    for (const auto& k : ch.kraus_ops) out += sandwich(k, m);
    return out;
}

inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    return DensityMatrix(apply(ch, rho.mat()), rho.dims());
}

/// Channel on a bipartite system built from product-form Kraus operators
/// A ⊗ B. Pauli-constructed channels carry their joint probability table.
class BipartiteChannel {
public:
    BipartiteChannel(int dim_a, int dim_b, std::vector<ComplexMatrix> joint_kraus,
                     std::optional<PauliSpec> pauli_table = std::nullopt)
        : dim_a_(dim_a), dim_b_(dim_b), kraus_(std::move(joint_kraus)),
          pauli_table_(std::move(pauli_table)) {
        const int dim = dim_a_ * dim_b_;
        require(!kraus_.empty(), "BipartiteChannel: needs at least one Kraus operator");
        ComplexMatrix tp = ComplexMatrix::zero(dim);
        ComplexMatrix un = ComplexMatrix::zero(dim);
        for (const auto& k : kraus_) {
            require(k.dim() == dim, "BipartiteChannel: Kraus operator dimension mismatch");
            tp += k.adjoint() * k;
            un += k * k.adjoint();
        }
        require(max_abs_diff(tp, ComplexMatrix::identity(dim)) <= kChannelTol,
                "BipartiteChannel: not trace preserving");
        unital_ = max_abs_diff(un, ComplexMatrix::identity(dim)) <= kChannelTol;
    }

    int dim_a() const { return dim_a_; }
    int dim_b() const { return dim_b_; }
    int dim() const { return dim_a_ * dim_b_; }
    bool unital() const { return unital_; }
    const std::vector<ComplexMatrix>& kraus_ops() const { return kraus_; }
    const std::optional<PauliSpec>& pauli_table() const { return pauli_table_; }

private:
    int dim_a_;
    int dim_b_;
    std::vector<ComplexMatrix> kraus_;
    bool unital_;
    std::optional<PauliSpec> pauli_table_;
};

inline ComplexMatrix apply(const BipartiteChannel& ch, const ComplexMatrix& m) {
    require(m.dim() == ch.dim(), "apply: dimension mismatch");
    ComplexMatrix out(m.dim());
    for (const auto& k : ch.kraus_ops()) out += sandwich(k, m);
    return out;
}

inline DensityMatrix apply(const BipartiteChannel& ch, const DensityMatrix& rho) {
    require(rho.dims().size() == 2 && rho.dims()[0] == ch.dim_a() && rho.dims()[1] == ch.dim_b(),
            "apply: state/channel subsystem mismatch");
    return DensityMatrix(apply(ch, rho.mat()), rho.dims());
}

/// One-sided Pauli channel on its local space: Kraus sqrt(q_mn) V_mn.
inline KrausChannel pauli_channel(const PauliSpec& spec) {
    require(!spec.is_joint(), "pauli_channel: needs a one-sided table");
    const int d = spec.d();
    std::vector<ComplexMatrix> ops;
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            const double w = spec.q(m, n);
            if (w <= 0.0) continue;
            ComplexMatrix k = weyl_operator({m, n, d});
            k *= std::sqrt(w);
            ops.push_back(std::move(k));
        }
    return KrausChannel(d, std::move(ops));
}

/// Embed a local channel as K ⊗ 1 or 1 ⊗ K on the bipartite space.
inline BipartiteChannel lift(const KrausChannel& ch, Side side, int other_dim) {
    require(other_dim >= 1, "lift: other_dim must be >= 1");
    const ComplexMatrix eye = ComplexMatrix::identity(other_dim);
    std::vector<ComplexMatrix> joint;
    joint.reserve(ch.kraus_ops.size());
    for (const auto& k : ch.kraus_ops)
        joint.push_back(side == Side::A ? tensor(k, eye) : tensor(eye, k));
    const int da = side == Side::A ? ch.local_dim : other_dim;
    const int db = side == Side::A ? other_dim : ch.local_dim;
    return BipartiteChannel(da, db, std::move(joint));
}

/// Two-sided Pauli channel from a joint table: Kraus
/// sqrt(q_mn m'n') (V_mn ⊗ V_m'n'). Accepts correlated tables.
inline BipartiteChannel two_sided_pauli(const PauliSpec& spec) {
    require(spec.is_joint(), "two_sided_pauli: needs a joint table");
    const int d = spec.d();
    const auto family = weyl_family(d);
    std::vector<ComplexMatrix> joint;
    for (int a = 0; a < d * d; ++a)
        for (int b = 0; b < d * d; ++b) {
            const auto ia = weyl_index_from_flat(a, d);
            const auto ib = weyl_index_from_flat(b, d);
            const double w = spec.q(ia.m, ia.n, ib.m, ib.n);
            if (w <= 0.0) continue;
            ComplexMatrix k = tensor(family[a], family[b]);
            k *= std::sqrt(w);
            joint.push_back(std::move(k));
        }
    return BipartiteChannel(d, d, std::move(joint), spec);
}

/// One-sided Pauli channel as a bipartite (degenerate two-sided) channel,
/// keeping the joint probability table.
inline BipartiteChannel one_sided_pauli(const PauliSpec& spec, Side side) {
    require(!spec.is_joint(), "one_sided_pauli: needs a one-sided table");
    const int d = spec.d();
    std::vector<double> delta(static_cast<std::size_t>(d) * d, 0.0);
    delta[0] = 1.0;
    const PauliSpec identity_side = PauliSpec::one_sided(d, std::move(delta));
    const PauliSpec joint = side == Side::A ? PauliSpec::product(spec, identity_side)
                                            : PauliSpec::product(identity_side, spec);
    return two_sided_pauli(joint);
}

/// Convenience: lifted d-dimensional depolarizing channel.
inline BipartiteChannel one_sided_depolarizing(int d, double p, Side side = Side::A) {
    return one_sided_pauli(depolarizing_spec(d, p), side);
}

/// Eq.-(28) two-sided depolarizing channel with equal noise on both sides.
inline BipartiteChannel two_sided_depolarizing(int d, double p) {
    const PauliSpec q = depolarizing_spec(d, p);
    return two_sided_pauli(PauliSpec::product(q, q));
}

/// Composition second ∘ first. Kraus set is the pairwise product; if both
/// factors carry Pauli tables the composed table is their group
/// convolution over (m, n) index addition mod d.
inline BipartiteChannel compose(const BipartiteChannel& first, const BipartiteChannel& second) {
    require(first.dim_a() == second.dim_a() && first.dim_b() == second.dim_b(),
            "compose: dimension mismatch");
    std::vector<ComplexMatrix> joint;
    joint.reserve(first.kraus_ops().size() * second.kraus_ops().size());
    for (const auto& k2 : second.kraus_ops())
        for (const auto& k1 : first.kraus_ops()) joint.push_back(k2 * k1);

    std::optional<PauliSpec> table;
    if (first.pauli_table() && second.pauli_table()) {
        const int d = first.dim_a();
        const std::size_t dd = static_cast<std::size_t>(d) * d;
        std::vector<double> conv(dd * dd, 0.0);
        const auto& q1 = *first.pauli_table();
        const auto& q2 = *second.pauli_table();
        for (int m1 = 0; m1 < d; ++m1)
            for (int n1 = 0; n1 < d; ++n1)
                for (int mt1 = 0; mt1 < d; ++mt1)
                    for (int nt1 = 0; nt1 < d; ++nt1) {
                        const double w1 = q1.q(m1, n1, mt1, nt1);
                        if (w1 == 0.0) continue;
                        for (int m2 = 0; m2 < d; ++m2)
                            for (int n2 = 0; n2 < d; ++n2)
                                for (int mt2 = 0; mt2 < d; ++mt2)
                                    for (int nt2 = 0; nt2 < d; ++nt2) {
                                        const double w2 = q2.q(m2, n2, mt2, nt2);
                                        if (w2 == 0.0) continue;
                                        const std::size_t a =
                                            static_cast<std::size_t>((m1 + m2) % d) * d +
                                            (n1 + n2) % d;
                                        const std::size_t b =
                                            static_cast<std::size_t>((mt1 + mt2) % d) * d +
                                            (nt1 + nt2) % d;
                                        conv[a * dd + b] += w1 * w2;
                                    }
                    }
        table = PauliSpec::joint(d, std::move(conv));
    }
    return BipartiteChannel(first.dim_a(), first.dim_b(), std::move(joint), std::move(table));
}

struct CovarianceReport {
    int trials;
    double max_residual;
    bool pass;
};

/// Lemma-4 check: Λ((Ua ⊗ Ub) ρ (Ua ⊗ Ub)†) = (Ua ⊗ Ub) Λ(ρ) (Ua ⊗ Ub)†
/// over Haar-random Ua, Ub and random full-rank ρ.
inline CovarianceReport verify_covariance(const BipartiteChannel& ch, int trials,
                                          std::uint64_t seed = 0x5eed) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        SeededRng rng(SeededRng::derive_seed(seed, t));
        const ComplexMatrix ua = random_unitary(ch.dim_a(), rng);
        const ComplexMatrix ub = random_unitary(ch.dim_b(), rng);
        const ComplexMatrix u = tensor(ua, ub);
        const DensityMatrix rho = random_density_matrix({ch.dim_a(), ch.dim_b()}, rng);
        const ComplexMatrix lhs = apply(ch, sandwich(u, rho.mat()));
        const ComplexMatrix rhs = sandwich(u, apply(ch, rho.mat()));
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return {trials, worst, worst < 1e-9};
}

}  // namespace densecode
