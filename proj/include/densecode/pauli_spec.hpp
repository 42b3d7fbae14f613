#pragma once

#include <cmath>
#include <vector>

#include <json.hpp>

#include "densecode/complex_matrix.hpp"

namespace densecode {

/// Probability table of a Pauli channel: q_mn over one side, or the joint
/// q_mn m'n' of a (possibly correlated) two-sided channel.
class PauliSpec {
public:
    static PauliSpec one_sided(int d, std::vector<double> q) {
        require(q.size() == static_cast<std::size_t>(d) * d,
                "PauliSpec: one-sided table needs d^2 entries");
        return PauliSpec(d, false, std::move(q));
    }

    static PauliSpec joint(int d, std::vector<double> q) {
        const std::size_t n = static_cast<std::size_t>(d) * d;
        require(q.size() == n * n, "PauliSpec: joint table needs d^4 entries");
        return PauliSpec(d, true, std::move(q));
    }

    /// Joint table q_a(m,n) * q_b(m',n') (Eq.-(28)-style product form;
    /// the two sides may differ).
    static PauliSpec product(const PauliSpec& qa, const PauliSpec& qb) {
        require(!qa.is_joint() && !qb.is_joint(), "PauliSpec::product: inputs must be one-sided");
        require(qa.d() == qb.d(), "PauliSpec::product: dimension mismatch");
        const int d = qa.d();
        std::vector<double> q;
        q.reserve(static_cast<std::size_t>(d) * d * d * d);
        for (double a : qa.q_) {
            for (double b : qb.q_) q.push_back(a * b);
        }
        return joint(d, std::move(q));
    }

    int d() const { return d_; }
    bool is_joint() const { return joint_; }

    double q(int m, int n) const {
        require(!joint_, "PauliSpec: one-sided lookup on a joint table");
        return q_[static_cast<std::size_t>(m) * d_ + n];
    }

    double q(int m, int n, int mt, int nt) const {
        require(joint_, "PauliSpec: joint lookup on a one-sided table");
        const std::size_t dd = static_cast<std::size_t>(d_) * d_;
        return q_[(static_cast<std::size_t>(m) * d_ + n) * dd + static_cast<std::size_t>(mt) * d_ + nt];
    }

    const std::vector<double>& table() const { return q_; }

    /// Marginal over Alice's indices: q_b(m', n') = sum_mn q_mn m'n'.
    std::vector<double> marginal_b() const {
        require(joint_, "PauliSpec::marginal_b: needs a joint table");
        const std::size_t dd = static_cast<std::size_t>(d_) * d_;
        std::vector<double> out(dd, 0.0);
        for (std::size_t a = 0; a < dd; ++a)
            for (std::size_t b = 0; b < dd; ++b) out[b] += q_[a * dd + b];
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["d"] = d_;
        if (!joint_) {
            nlohmann::ordered_json rows = nlohmann::ordered_json::array();
            for (int m = 0; m < d_; ++m) {
                nlohmann::ordered_json row = nlohmann::ordered_json::array();
                for (int n = 0; n < d_; ++n) row.push_back(q(m, n));
                rows.push_back(std::move(row));
            }
            j["q"] = std::move(rows);
        } else {
            nlohmann::ordered_json outer = nlohmann::ordered_json::array();
            for (int m = 0; m < d_; ++m) {
                nlohmann::ordered_json l1 = nlohmann::ordered_json::array();
                for (int n = 0; n < d_; ++n) {
                    nlohmann::ordered_json l2 = nlohmann::ordered_json::array();
                    for (int mt = 0; mt < d_; ++mt) {
                        nlohmann::ordered_json l3 = nlohmann::ordered_json::array();
                        for (int nt = 0; nt < d_; ++nt) l3.push_back(q(m, n, mt, nt));
                        l2.push_back(std::move(l3));
                    }
                    l1.push_back(std::move(l2));
                }
                outer.push_back(std::move(l1));
            }
            j["q"] = std::move(outer);
        }
        return j;
    }

    static PauliSpec from_json(const nlohmann::json& j) {
        require(j.contains("d") && j.contains("q"), "PauliSpec: JSON needs fields d and q");
        const int d = j.at("d").get<int>();
        require(d >= 1, "PauliSpec: d must be >= 1");
        const auto& q = j.at("q");
        require(q.is_array() && q.size() == static_cast<std::size_t>(d), "PauliSpec: q must have d rows");
        const bool joint_table = q.at(0).at(0).is_array();
        std::vector<double> flat;
        if (!joint_table) {
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n) flat.push_back(q.at(m).at(n).get<double>());
            return one_sided(d, std::move(flat));
        }
        for (int m = 0; m < d; ++m)
            for (int n = 0; n < d; ++n)
                for (int mt = 0; mt < d; ++mt)
                    for (int nt = 0; nt < d; ++nt)
                        flat.push_back(q.at(m).at(n).at(mt).at(nt).get<double>());
        return joint(d, std::move(flat));
    }

private:
    PauliSpec(int d, bool joint_table, std::vector<double> q)
        : d_(d), joint_(joint_table), q_(std::move(q)) {
        require(d_ >= 1, "PauliSpec: d must be >= 1");
        double sum = 0.0;
        for (double x : q_) {
            require(x >= -1e-12, "PauliSpec: negative probability");
            sum += x;
        }
        require(std::abs(sum - 1.0) <= 1e-9, "PauliSpec: probabilities must sum to 1");
    }

    int d_;
    bool joint_;
    std::vector<double> q_;  // row-major (m, n) or (m, n, mt, nt)
};

/// Eq.-(29) table: q_00 = 1 - p + p/d^2, all other entries p/d^2.
inline PauliSpec depolarizing_spec(int d, double p) {
    require(d >= 1, "depolarizing_spec: d must be >= 1");
    require(p >= 0.0 && p <= 1.0, "depolarizing_spec: p must lie in [0, 1]");
    std::vector<double> q(static_cast<std::size_t>(d) * d, p / (d * d));
    q[0] = 1.0 - p + p / (d * d);
    return PauliSpec::one_sided(d, std::move(q));
}

}  // namespace densecode
