// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "densecode/densecode.hpp"

using namespace densecode;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail, double seconds) {
    std::printf("%s criterion %2d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

void run(int criterion, const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        std::tie(pass, detail) = body();
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(criterion, pass, detail, seconds);
}

std::string fmt(const char* format, ...) {
    char buf[256];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

}  // namespace

int main() {
    // 1. Threshold reproduction, runtime < 1 s.
    run(1, [] {
        const auto start = std::chrono::steady_clock::now();
        const RootReport r = find_threshold_alpha();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = r.root >= 0.344 && r.root <= 0.346 && secs < 1.0;
        return std::make_pair(pass, fmt("threshold p_t = %.6f in [0.344, 0.346]", r.root));
    });

    // 2. Classical-limit crossing, runtime < 1 s.
    run(2, [] {
        const auto start = std::chrono::steady_clock::now();
        const RootReport r = find_classical_limit_crossing();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = r.root >= 0.251 && r.root <= 0.253 && secs < 1.0;
        return std::make_pair(pass, fmt("crossing p = %.6f in [0.251, 0.253]", r.root));
    });

    // 3. Eigenvalue formulas on the 21x21 grid, < 5 s.
    run(3, [] {
        const auto start = std::chrono::steady_clock::now();
        double worst = 0.0;
        for (int ia = 0; ia <= 20; ++ia)
            for (int ip = 0; ip <= 20; ++ip) {
                const double alpha = 0.5 * ia / 20.0;
                const double p = static_cast<double>(ip) / 20.0;
                const DensityMatrix out =
                    apply(two_sided_depolarizing(2, p), schmidt_density(alpha));
                const AlphaSpectra s = alpha_channel_spectra(alpha, p);
                auto gammas = s.gamma;
                std::sort(gammas.begin(), gammas.end(), std::greater<>());
                const Spectrum joint = hermitian_eigenvalues(out.mat());
                for (int k = 0; k < 4; ++k)
                    worst = std::max(worst, std::abs(joint.values[k] - gammas[k]));
                auto xis = s.xi;
                std::sort(xis.begin(), xis.end(), std::greater<>());
                const Spectrum reduced =
                    hermitian_eigenvalues(partial_trace(out, Side::B).mat());
                for (int k = 0; k < 2; ++k)
                    worst = std::max(worst, std::abs(reduced.values[k] - xis[k]));
            }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::make_pair(worst < 1e-9 && secs < 5.0,
                              fmt("gamma/xi worst residual %.2e (tol 1e-9)", worst));
    });

    // 4. Closed forms vs the general unital path, within 1e-8.
    run(4, [] {
        double worst = 0.0;
        for (int ia = 0; ia <= 20; ++ia)
            for (int ip = 0; ip <= 20; ++ip) {
                const double alpha = 0.5 * ia / 20.0;
                const double p = static_cast<double>(ip) / 20.0;
                const double general =
                    capacity_unital(schmidt_density(alpha), two_sided_depolarizing(2, p), 24, 7)
                        .value;
                worst = std::max(worst, std::abs(general - capacity_alpha(alpha, p)));
            }
        const DensityMatrix bell = bell_density(2);
        for (int ip = 0; ip <= 20; ++ip) {
            const double p = static_cast<double>(ip) / 20.0;
            worst = std::max(
                worst, std::abs(capacity_unital(bell, two_sided_depolarizing(2, p), 24, 7).value -
                                capacity_bell_two_sided_dep2(p)));
            worst = std::max(
                worst,
                std::abs(capacity_unital(schmidt_density(0.0), two_sided_depolarizing(2, p), 24, 7)
                             .value -
                         classical_dep2_capacity(p)));
            worst = std::max(
                worst, std::abs(capacity_unital(bell, one_sided_depolarizing(2, p), 24, 7).value -
                                capacity_bell_one_sided_dep2(p)));
        }
        SeededRng rng(404);
        for (int trial = 0; trial < 5; ++trial) {
            const PauliSpec spec = PauliSpec::one_sided(2, random_probabilities(4, rng));
            worst = std::max(
                worst, std::abs(capacity_unital(bell, one_sided_pauli(spec, Side::A), 24, 7).value -
                                capacity_bell_one_sided_pauli(spec)));
            for (double eta : {0.0, 0.3, 0.7, 1.0}) {
                worst = std::max(worst, std::abs(capacity_unital(werner_state(2, eta),
                                                                 one_sided_pauli(spec, Side::A),
                                                                 24, 7)
                                                     .value -
                                                 capacity_werner_one_sided_pauli(2, eta, spec)));
            }
        }
        return std::make_pair(worst < 1e-8,
                              fmt("closed-form vs general-path worst gap %.2e (tol 1e-8)", worst));
    });

    // 5. Lemma suite at residual < 1e-7, d in {2,3}, >= 20 seeds, < 30 s.
    run(5, [] {
        const auto start = std::chrono::steady_clock::now();
        const std::uint64_t seed = 0xacce97;
        struct Item {
            const char* name;
            double residual;
        };
        const std::vector<Item> items = {
            {"lemma1a", checks::lemma1a_average_state(seed)},
            {"lemma1b", checks::lemma1b_trace_identity(seed)},
            {"lemma1c", checks::lemma1c_relative_entropy(seed)},
            {"lemma3", checks::lemma3_orthogonality(seed)},
            {"lemma4", checks::lemma4_covariance(seed)},
            {"appendixA", checks::appendix_a_identity(seed)},
            {"appendixB", checks::appendix_b_inner_product(seed)},
        };
        double worst = 0.0;
        std::string detail = "residuals";
        for (const auto& item : items) {
            worst = std::max(worst, item.residual);
            detail += fmt(" %s=%.1e", item.name, item.residual);
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::make_pair(worst < 1e-7 && secs < 30.0, detail + " (tol 1e-7)");
    });

    // 6. Lemma 2 adversarial check: 500 restarts, p in {0.1, 0.3, 0.7}, < 2 min.
    run(6, [] {
        const auto start = std::chrono::steady_clock::now();
        const DensityMatrix bell = bell_density(2);
        double worst_excess = -1.0, worst_weyl = 0.0;
        for (double p : {0.1, 0.3, 0.7}) {
            const BipartiteChannel ch = one_sided_depolarizing(2, p);
            const double cap = capacity_bell_one_sided_dep2(p);
            const OptimizeResult r = brute_force_best_encoding(bell, ch, 4, 500, 0xbead);
            worst_excess = std::max(worst_excess, r.best_chi - cap);
            const double weyl = holevo(encode_ensemble(EncodingScheme::weyl(2), bell, ch));
            worst_weyl = std::max(worst_weyl, std::abs(weyl - cap));
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = worst_excess <= 1e-6 && worst_weyl <= 1e-9 && secs < 120.0;
        return std::make_pair(
            pass, fmt("max excess over formula %.2e (tol 1e-6), Weyl gap %.2e (tol 1e-9)",
                      worst_excess, worst_weyl));
    });

    // 7. Figure-3 envelope on the 201-point grid.
    run(7, [] {
        const auto grid = default_p_grid();
        const SweepResult sweep = sweep_figure3(grid);
        bool pass = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::size_t best = 0;
            for (std::size_t s = 1; s < sweep.series.size(); ++s)
                if (sweep.series[s].second[i] > sweep.series[best].second[i]) best = s;
            if (grid[i] < 0.344 && best != 3) pass = false;
            if (grid[i] > 0.346 && best != 0) pass = false;
        }
        return std::make_pair(pass, std::string("argmax is alpha=1/2 below and alpha=0 above p_t"));
    });

    // 8. Figure-4 ordering.
    run(8, [] {
        const auto grid = default_p_grid();
        const SweepResult sweep = sweep_figure4(grid);
        const auto& one = sweep.series[0].second;
        const auto& two = sweep.series[1].second;
        const auto& cls = sweep.series[2].second;
        bool pass = true;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (one[i] < cls[i] - 1e-12) pass = false;
            // At p=1 the full twirl makes both capacities exactly zero.
            if (grid[i] > 0.346 && grid[i] < 1.0 && !(two[i] < cls[i])) pass = false;
            if (grid[i] >= 1.0 && two[i] > cls[i] + 1e-15) pass = false;
        }
        return std::make_pair(pass,
                              std::string("one-sided >= classical; two-sided < classical above p_t"));
    });

    // 9. Pre-processing gain at p in {0.4, 0.6, 0.8}.
    run(9, [] {
        const DensityMatrix bell = bell_density(2);
        const auto candidates = builtin_preprocessing_candidates(2);
        double worst = 0.0;
        bool strictly_above = true;
        for (double p : {0.4, 0.6, 0.8}) {
            const PreprocessingResult r =
                preprocessing_capacity(bell, two_sided_depolarizing(2, p), candidates);
            worst = std::max(worst, std::abs(r.value - classical_dep2_capacity(p)));
            if (!(r.value > capacity_bell_two_sided_dep2(p))) strictly_above = false;
        }
        return std::make_pair(worst < 1e-9 && strictly_above,
                              fmt("pre-processed value vs classical capacity gap %.2e (tol 1e-9)",
                                  worst));
    });

    // 10. Mixed-state bound: 100 random states at p in {0.2, 0.5}.
    run(10, [] {
        double worst = 0.0;
        for (double p : {0.2, 0.5}) {
            const BipartiteChannel ch = two_sided_depolarizing(2, p);
            const double bound = std::max(capacity_alpha(0.5, p), capacity_alpha(0.0, p));
            for (int trial = 0; trial < 100; ++trial) {
                SeededRng rng(SeededRng::derive_seed(0xfeed, trial + (p > 0.3 ? 1000 : 0)));
                const DensityMatrix rho = random_density_matrix({2, 2}, rng);
                worst = std::max(worst, capacity_unital(rho, ch, 24, 7).value - bound);
            }
        }
        return std::make_pair(worst <= 1e-7,
                              fmt("max excess over pure-state envelope %.2e (tol 1e-7)", worst));
    });

    if (g_failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
