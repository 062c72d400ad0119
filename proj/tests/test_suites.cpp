#include "hlv/suites.hpp"

#include <doctest.h>

using namespace hlv;

TEST_CASE("registry")
{
    CHECK(list_suites().size() >= 12);
    CHECK(find_suite("creation") != nullptr);
    CHECK(find_suite("nope") == nullptr);
    CHECK_THROWS_AS(run_suite("nope", {}), std::out_of_range);
}

TEST_CASE("suites pass at small weights")
{
    for (const SuiteInfo& info : list_suites()) {
        if (info.name == "stability")
            continue;
        SuiteOptions opts;
        opts.max_weight = std::min(info.default_weight, 3);
        const SuiteResult result = run_suite(info.name, opts);
        INFO(info.name, ": ", result.to_json().dump());
        CHECK(result.passed);
        CHECK_FALSE(result.integrity_error);
        CHECK(result.checks > 0);
    }
}

TEST_CASE("the stability suite reports the first triple past the bound")
{
    const SuiteResult result = run_suite("stability", {1, 1, 1});
    CHECK_FALSE(result.passed);
    REQUIRE(result.failure);
    const Json& failure = *result.failure;
    CHECK(failure.at("check") == "onset within bound");
    CHECK(failure.at("nu") == Json::array({1}));
    CHECK(failure.at("onset") == 2);
    CHECK(failure.at("separation_limit") == 2);
}

TEST_CASE("reports do not depend on the thread count")
{
    for (const char* name : {"omega", "stability", "hall"}) {
        const SuiteResult serial = run_suite(name, {2, 99, 1});
        const SuiteResult threaded = run_suite(name, {2, 99, 4});
        CHECK(serial.to_json() == threaded.to_json());
    }
}

TEST_CASE("first failure in case order wins")
{
    std::vector<Case> cases;
    for (int i = 0; i < 8; ++i) {
        cases.push_back([i] {
            CaseResult r;
            if (i % 3 == 2)
                r.failure = Json{{"case", i}};
            if (i == 0)
                r.warnings.push_back("note");
            return r;
        });
    }
    const SuiteResult result = run_cases("synthetic", 0, cases, 3);
    CHECK_FALSE(result.passed);
    CHECK(result.failure->at("case") == 2);
    CHECK(result.warnings == std::vector<std::string>{"note"});
    CHECK(result.checks == 8);
}
