#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "densecode/capacity.hpp"
#include "densecode/preprocessing.hpp"
#include "densecode/states.hpp"

namespace densecode {

struct RootReport {
    double root;
    std::pair<double, double> bracket;  // final bracket, width < 1e-10
    int iterations;
    double residual;  // |f(root)|, < 1e-9

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["root"] = root;
        j["bracket"] = {bracket.first, bracket.second};
        j["iterations"] = iterations;
        j["residual"] = residual;
        return j;
    }
};

/// Bisection on a sign-changing bracket. Terminates when the bracket is
/// narrower than 1e-10 and |f(mid)| < 1e-9, within at most 60 iterations.
inline RootReport bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    const double fhi = f(hi);
    require(std::isfinite(flo) && std::isfinite(fhi), "bisect: non-finite endpoint value");
    require(flo == 0.0 || fhi == 0.0 || (flo > 0.0) != (fhi > 0.0),
            "bisect: bracket endpoints must have opposite signs");
    double mid = 0.5 * (lo + hi);
    double fmid = f(mid);
    int iterations = 0;
    while (iterations < 60 && (hi - lo >= 1e-10 || std::abs(fmid) >= 1e-9)) {
        ++iterations;
        if (fmid == 0.0) break;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        mid = 0.5 * (lo + hi);
        fmid = f(mid);
    }
    return {mid, {lo, hi}, iterations, std::abs(fmid)};
}

/// Noise level where the Bell-state and product-state capacities of the
/// two-sided qubit depolarizing channel cross (p_t near 0.345).
inline RootReport find_threshold_alpha() {
    return bisect([](double p) { return capacity_alpha(0.5, p) - capacity_alpha(0.0, p); }, 0.2,
                  0.5);
}

/// Noise level where the one-sided depolarizing Bell capacity drops to
/// one bit, the most a qubit carries without entanglement (near 0.252).
inline RootReport find_classical_limit_crossing() {
    return bisect([](double p) { return capacity_bell_one_sided_dep2(p) - 1.0; }, 0.1, 0.5);
}

struct SweepResult {
    std::string parameter_name;
    std::vector<double> grid;
    std::vector<std::pair<std::string, std::vector<double>>> series;

    std::string to_csv() const {
        std::string out = parameter_name;
        for (const auto& [name, values] : series) {
            out += ',';
            out += name;
        }
        out += '\n';
        char buf[32];
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.12g", grid[i]);
            out += buf;
            for (const auto& [name, values] : series) {
                std::snprintf(buf, sizeof buf, ",%.12g", values[i]);
                out += buf;
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["parameter_name"] = parameter_name;
        j["grid"] = grid;
        nlohmann::ordered_json s;
        for (const auto& [name, values] : series) s[name] = values;
        j["series"] = std::move(s);
        return j;
    }
};

inline std::vector<double> default_p_grid(int points = 201) {
    require(points >= 2, "default_p_grid: needs at least 2 points");
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) grid[i] = static_cast<double>(i) / (points - 1);
    return grid;
}

namespace detail {

inline std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

}  // namespace detail

/// Capacity of |phi_alpha> through the two-sided qubit depolarizing
/// channel, one series per alpha (figure-3 data).
inline SweepResult sweep_figure3(const std::vector<double>& alphas,
                                 const std::vector<double>& p_grid) {
    require(!alphas.empty() && !p_grid.empty(), "sweep_figure3: empty grid");
    SweepResult out{"p", p_grid, {}};
    for (double alpha : alphas) {
        std::vector<double> values;
        values.reserve(p_grid.size());
        for (double p : p_grid) values.push_back(capacity_alpha(alpha, p));
        out.series.emplace_back("alpha=" + detail::format_number(alpha), std::move(values));
    }
    return out;
}

inline SweepResult sweep_figure3(const std::vector<double>& p_grid) {
    return sweep_figure3({0.0, 0.08, 0.2, 0.5}, p_grid);
}

/// Bell capacities for one- and two-sided qubit depolarizing channels,
/// the classical depolarizing capacity, and the 1-bit line (figure 4).
inline SweepResult sweep_figure4(const std::vector<double>& p_grid) {
    require(!p_grid.empty(), "sweep_figure4: empty grid");
    SweepResult out{"p", p_grid, {}};
    std::vector<double> one, two, cls, lim;
    for (double p : p_grid) {
        one.push_back(capacity_bell_one_sided_dep2(p));
        two.push_back(capacity_bell_two_sided_dep2(p));
        cls.push_back(classical_dep2_capacity(p));
        lim.push_back(1.0);
    }
    out.series.emplace_back("one_sided_bell", std::move(one));
    out.series.emplace_back("two_sided_bell", std::move(two));
    out.series.emplace_back("classical", std::move(cls));
    out.series.emplace_back("classical_limit", std::move(lim));
    return out;
}

/// Bell capacity with and without the built-in pre-processing set for the
/// two-sided qubit depolarizing channel (figure 5).
inline SweepResult sweep_figure5(const std::vector<double>& p_grid) {
    require(!p_grid.empty(), "sweep_figure5: empty grid");
    const DensityMatrix bell = bell_density(2);
    const auto candidates = builtin_preprocessing_candidates(2);
    SweepResult out{"p", p_grid, {}};
    std::vector<double> plain, pre;
    for (double p : p_grid) {
        plain.push_back(capacity_bell_two_sided_dep2(p));
        pre.push_back(preprocessing_capacity(bell, two_sided_depolarizing(2, p), candidates).value);
    }
    out.series.emplace_back("bell_no_preprocessing", std::move(plain));
    out.series.emplace_back("bell_preprocessed", std::move(pre));
    return out;
}

}  // namespace densecode
