#include <doctest.h>

#include "property_suite.hpp"

TEST_CASE("randomized property suite") {
    auto stats = aomoto::testing::run_property_suite(1000, 0xA0310);
    for (const std::string& msg : stats.messages) MESSAGE(msg);
    CHECK(stats.cases >= 1000);
    CHECK(stats.assertions > 5000);
    CHECK(stats.failures == 0);
}
