#include "catch_amalgamated.hpp"

#include <cmath>
#include <sstream>

#include "densecode/densecode.hpp"

using namespace densecode;

namespace {

constexpr double kThresholdRoot = 0.34449228302784008;  // 40-digit bisection on Eq. (40)
constexpr double kCrossingRoot = 0.25238616655364235;   // Eq. (52) value = 1

std::size_t argmax_at(const SweepResult& sweep, std::size_t point) {
    std::size_t best = 0;
    for (std::size_t s = 1; s < sweep.series.size(); ++s)
        if (sweep.series[s].second[point] > sweep.series[best].second[point]) best = s;
    return best;
}

}  // namespace

TEST_CASE("threshold between Bell and product resources", "[analysis]") {
    const RootReport r = find_threshold_alpha();
    REQUIRE(r.root >= 0.344);
    REQUIRE(r.root <= 0.346);
    REQUIRE(r.root == Catch::Approx(kThresholdRoot).margin(1e-9));
    REQUIRE(r.residual < 1e-9);
    REQUIRE(r.iterations <= 60);
    REQUIRE(r.bracket.second - r.bracket.first < 1e-10);
    REQUIRE(r.root >= r.bracket.first);
    REQUIRE(r.root <= r.bracket.second);

    // Endpoint signs that justify the bracket.
    REQUIRE(capacity_alpha(0.5, 0.0) - capacity_alpha(0.0, 0.0) == Catch::Approx(1.0));
    REQUIRE(capacity_alpha(0.5, 0.5) - capacity_alpha(0.0, 0.5) < 0.0);
}

TEST_CASE("classical-limit crossing of the one-sided capacity", "[analysis]") {
    const RootReport r = find_classical_limit_crossing();
    REQUIRE(r.root >= 0.251);
    REQUIRE(r.root <= 0.253);
    REQUIRE(r.root == Catch::Approx(kCrossingRoot).margin(1e-9));
    REQUIRE(r.residual < 1e-9);
    REQUIRE(r.iterations <= 60);
    REQUIRE(r.bracket.second - r.bracket.first < 1e-10);

    REQUIRE(capacity_bell_one_sided_dep2(0.0) == Catch::Approx(2.0));
    REQUIRE(capacity_bell_one_sided_dep2(0.5) < 1.0);
}

TEST_CASE("bisection bracket validation", "[analysis]") {
    REQUIRE_THROWS_AS(bisect([](double) { return 1.0; }, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("figure 3 sweep", "[analysis]") {
    const auto grid = default_p_grid();
    const SweepResult sweep = sweep_figure3(grid);
    REQUIRE(sweep.series.size() == 4);
    REQUIRE(sweep.series[0].first == "alpha=0");
    REQUIRE(sweep.series[3].first == "alpha=0.5");

    SECTION("Bell series starts at two bits") {
        REQUIRE(sweep.series[3].second[0] == Catch::Approx(2.0).margin(1e-12));
    }
    SECTION("the argmax flips exactly once, at the threshold grid point") {
        std::vector<std::size_t> flips;
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (argmax_at(sweep, i) != argmax_at(sweep, i - 1)) flips.push_back(i);
        REQUIRE(flips.size() == 1);
        REQUIRE(std::abs(grid[flips[0]] - 0.345) <= 0.005 + 1e-12);
        REQUIRE(argmax_at(sweep, 0) == 3);              // alpha = 1/2
        REQUIRE(argmax_at(sweep, grid.size() - 1) == 0);  // alpha = 0
    }
    SECTION("alpha=0.2 stays below the best of the extremes") {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double envelope =
                std::max(sweep.series[0].second[i], sweep.series[3].second[i]);
            if (grid[i] <= 0.995) {
                REQUIRE(sweep.series[2].second[i] < envelope);
            } else {
                // Full twirl at p=1 sends every input to 1/4: exact tie at zero.
                REQUIRE(sweep.series[2].second[i] <= envelope + 1e-12);
            }
        }
    }
}

TEST_CASE("figure 4 sweep", "[analysis]") {
    const auto grid = default_p_grid();
    const SweepResult sweep = sweep_figure4(grid);
    REQUIRE(sweep.series.size() == 4);
    const auto& one = sweep.series[0].second;
    const auto& two = sweep.series[1].second;
    const auto& cls = sweep.series[2].second;
    const auto& lim = sweep.series[3].second;

    SECTION("values at p=0") {
        REQUIRE(one[0] == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(two[0] == Catch::Approx(2.0).margin(1e-12));
        REQUIRE(cls[0] == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(lim[0] == 1.0);
    }
    SECTION("one-sided capacity dominates the classical one everywhere") {
        for (std::size_t i = 0; i < grid.size(); ++i) REQUIRE(one[i] >= cls[i] - 1e-12);
    }
    SECTION("monotone non-increasing capacities") {
        for (std::size_t i = 1; i < grid.size(); ++i) {
            REQUIRE(one[i] <= one[i - 1] + 1e-12);
            REQUIRE(two[i] <= two[i - 1] + 1e-12);
            REQUIRE(cls[i] <= cls[i - 1] + 1e-12);
        }
    }
    SECTION("two-sided vs classical crossing sits at the threshold") {
        // Strict comparison: at p=1 both capacities are exactly zero.
        std::vector<double> flips;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const bool before = two[i - 1] > cls[i - 1] + 1e-12;
            const bool after = two[i] > cls[i] + 1e-12;
            if (before != after) flips.push_back(grid[i]);
        }
        REQUIRE(flips.size() == 1);
        REQUIRE(std::abs(flips[0] - 0.345) <= 0.005 + 1e-12);
    }
    SECTION("one-sided capacity crosses the one-bit line near p=0.252") {
        std::vector<double> flips;
        for (std::size_t i = 1; i < grid.size(); ++i)
            if ((one[i - 1] >= 1.0) != (one[i] >= 1.0)) flips.push_back(grid[i]);
        REQUIRE(flips.size() == 1);
        REQUIRE(std::abs(flips[0] - 0.2525) <= 0.005);
    }
}

TEST_CASE("figure 5 sweep", "[analysis]") {
    const std::vector<double> grid{0.0, 0.1, 0.345, 0.5, 0.8, 1.0};
    const SweepResult sweep = sweep_figure5(grid);
    const auto& plain = sweep.series[0].second;
    const auto& pre = sweep.series[1].second;

    SECTION("above threshold the pre-processed value is the classical capacity") {
        REQUIRE(pre[3] == Catch::Approx(classical_dep2_capacity(0.5)).margin(1e-9));
        REQUIRE(pre[3] > plain[3]);
        REQUIRE(pre[4] == Catch::Approx(classical_dep2_capacity(0.8)).margin(1e-9));
        REQUIRE(pre[4] > plain[4]);
    }
    SECTION("below threshold both series agree") {
        REQUIRE(pre[1] == Catch::Approx(plain[1]).margin(1e-9));
    }
    SECTION("both vanish at full noise") {
        REQUIRE(plain[5] == Catch::Approx(0.0).margin(1e-10));
        REQUIRE(pre[5] == Catch::Approx(0.0).margin(1e-10));
    }
}

TEST_CASE("sweep serialization", "[analysis]") {
    const std::vector<double> grid{0.0, 0.5, 1.0};
    const SweepResult sweep = sweep_figure4(grid);

    SECTION("CSV has a header row and one row per grid point") {
        const std::string csv = sweep.to_csv();
        std::istringstream in(csv);
        std::string line;
        std::getline(in, line);
        REQUIRE(line == "p,one_sided_bell,two_sided_bell,classical,classical_limit");
        int rows = 0;
        while (std::getline(in, line)) ++rows;
        REQUIRE(rows == 3);
    }
    SECTION("JSON mirror carries the same fields") {
        const auto j = sweep.to_json();
        REQUIRE(j.at("parameter_name") == "p");
        REQUIRE(j.at("grid").size() == 3);
        REQUIRE(j.at("series").contains("one_sided_bell"));
        REQUIRE(j.at("series").at("classical").size() == 3);
    }
}
