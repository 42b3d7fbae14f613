#include "catch_amalgamated.hpp"

#include <map>

#include "densecode/densecode.hpp"

using namespace densecode;

TEST_CASE("registry completeness", "[verification]") {
    // One entry per documented invariant; regenerate this table when a
    // module gains or loses an invariant.
    const std::map<std::string, int> expected = {
        {"qops", 4},
        {"channels", 7},
        {"dense-coding", 7},
        {"analysis", 3},
    };
    std::map<std::string, int> counts;
    for (const auto& check : property_registry()) ++counts[check.module];
    REQUIRE(counts == expected);
    REQUIRE(property_registry().size() == 21);
}

TEST_CASE("full property suite passes", "[verification][slow]") {
    const auto reports = run_property_suite(0x5eed);
    for (const auto& r : reports) {
        INFO(r.module << "/" << r.name << " residual=" << r.residual
                      << " tol=" << r.tolerance);
        CHECK(r.pass);
    }
    REQUIRE(reports.size() == property_registry().size());
}
