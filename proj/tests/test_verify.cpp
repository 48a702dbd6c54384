#include "doctest.h"

#include "kchar/verify.hpp"

using namespace kchar;
using namespace kchar::verify;

TEST_CASE("suite registry") {
    auto names = suite_names();
    CHECK(names.size() >= 15);
    CHECK(std::find(names.begin(), names.end(), "sp4-principal-recursion") != names.end());
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("fast suites pass") {
    for (const char* name : {"series-core", "sl2sl2-characters", "sl3-root-induced",
                             "sl3-root-quotient", "sp4-root-weyl", "sp4-principal-base",
                             "harness-selftest"}) {
        auto report = run_suite(name);
        CAPTURE(name);
        CHECK(report.pass());
        CHECK(report.checked > 0);
    }
}

TEST_CASE("dimension audit and the seeded fault") {
    auto clean = cg_dimension_audit(30);
    CHECK(clean.pass());
    CHECK(clean.checked == 31 * 31);

    auto faulty = cg_dimension_audit(30, FaultSpec{12, 9, 3, Rational(1)});
    REQUIRE_FALSE(faulty.pass());
    CHECK(faulty.failures.size() == 1);
    CHECK(faulty.failures[0].where == "audit p=12 q=9");
    CHECK(faulty.failures[0].expected == "130");
    CHECK(faulty.failures[0].actual == "134");

    // a fault that cancels in the weighted sum is designed not to exist:
    // any single-coefficient change shifts the sum by delta*(e+1) != 0
    auto off_by_minus = cg_dimension_audit(10, FaultSpec{2, 2, 4, Rational(-1)});
    CHECK_FALSE(off_by_minus.pass());
}
