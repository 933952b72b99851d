#include <doctest.h>

#include "property_suite.hpp"

/* Randomized suites with fixed seeds; the same functions back the final
   acceptance gate, which reports the case counts it saw. */

TEST_CASE("random CSS tableaux satisfy the symplectic relation") {
    property_suite::suite_result res =
        property_suite::tableau_symplectic_random(700, 20260819);
    CHECK(res.cases >= 500);
    CHECK(res.failures == 0);
    for (const auto& note : res.notes)
        MESSAGE(note);
}

TEST_CASE("random group centers commute and stay in span") {
    property_suite::suite_result res = property_suite::center_random(400, 7);
    CHECK(res.cases >= 1000);
    CHECK(res.failures == 0);
    for (const auto& note : res.notes)
        MESSAGE(note);
}

TEST_CASE("random ring lifts are homomorphic") {
    property_suite::suite_result res = property_suite::lift_random(500, 11);
    CHECK(res.cases == 1000);
    CHECK(res.failures == 0);
    for (const auto& note : res.notes)
        MESSAGE(note);
}

TEST_CASE("random rank identities hold") {
    property_suite::suite_result res = property_suite::rank_random(300, 23);
    CHECK(res.cases == 1500);
    CHECK(res.failures == 0);
    for (const auto& note : res.notes)
        MESSAGE(note);
}
