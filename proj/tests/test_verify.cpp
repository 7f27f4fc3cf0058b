#include "doctest.h"
#include "mhn/errors.hpp"
#include "mhn/verify.hpp"

using namespace mhn;

TEST_CASE("named suites run and pass") {
    for (const char* suite : {"oracle-cutjoin", "polynomiality", "airy"}) {
        CAPTURE(suite);
        auto results = run_suite(suite);
        CHECK(!results.empty());
        CHECK(all_passed(results));
        for (const auto& r : results) {
            CHECK(!r.name.empty());
            CHECK(!r.detail.empty());
            CHECK(r.seconds >= 0.0);
        }
    }
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("nonsense"), Error);
    CHECK_THROWS_AS(run_suite(""), Error);
}

TEST_CASE("all_passed notices a failure") {
    std::vector<CheckResult> rs = {{"a", true, "", 0.0}, {"b", false, "x", 0.0}};
    CHECK(!all_passed(rs));
    rs[1].passed = true;
    CHECK(all_passed(rs));
}
