#include <stdexcept>

#include <doctest.h>

#include "tracgeo/verify.hpp"

using namespace tracgeo;

TEST_CASE("suite registry") {
    CHECK(is_known_suite("default"));
    CHECK(is_known_suite("unit-printed"));
    CHECK_FALSE(is_known_suite("no-such-suite"));
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("focused suites pass") {
    for (const char* name : {"branches", "sweep"}) {
        const auto results = run_suite(name);
        CHECK_FALSE(results.empty());
        CHECK(all_passed(results));
    }
}

TEST_CASE("the printed unit-regime numerator fails the norm check") {
    const auto results = run_suite("unit-printed");
    REQUIRE(results.size() == 2);
    CHECK(results[0].name == "unit_printed_numerator_norm_error");
    CHECK_FALSE(results[0].pass);
    CHECK(results[0].measured > 1e-2);
    CHECK(results[1].name == "unit_corrected_numerator_norm_error");
    CHECK(results[1].pass);
    CHECK_FALSE(all_passed(results));
}
