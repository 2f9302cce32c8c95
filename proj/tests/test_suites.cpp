#include "d21/suites.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace d21;

TEST_CASE("report bookkeeping") {
    SuiteReport r;
    r.suite = "demo";
    r.check(true, "a");
    r.check(false, "b", "1", "2");
    CHECK(r.total == 2);
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 1);
    auto j = nlohmann::json::parse(suite_json(r));
    CHECK(j["passed"].get<int>() + j["failed"].get<int>() == j["total"].get<int>());
    CHECK(j["failures"][0]["weight"] == "b");
    CHECK(j["failures"][0]["status"] == "fail");
    CHECK(suite_text(r).find("FAIL b") != std::string::npos);
}

TEST_CASE("regime cases") {
    CHECK(regime_case("mirror").P == Parameter::Rational(1, 2));
    CHECK(regime_case("generic").P.generic);
    CHECK_THROWS_AS(regime_case("nope"), UsageError);
    CHECK(sweep_cases().size() == 8);
}

TEST_CASE("small suites pass") {
    for (const auto& c : sweep_cases()) {
        CHECK(verify_flags(c.P, c.k, 3).ok());
        CHECK(verify_duality(c.P, c.k, 3).ok());
        CHECK(verify_projective_tilting(c.P, c.k, 3).ok());
        CHECK(verify_bgg(c.P, c.k, 3, 5, 3, 1).ok());
    }
    CHECK(verify_blocks(Parameter::Rational(3, 2), 4, 500, 1).ok());
    CHECK(verify_jacobi(Parameter::Generic()).ok());
}

TEST_CASE("sampling is reproducible") {
    Parameter P = Parameter::Rational(2, 3);
    CHECK(suite_json(verify_bgg(P, 1, 4, 4, 4, 9)) == suite_json(verify_bgg(P, 1, 4, 4, 4, 9)));
    CHECK(suite_json(verify_blocks(P, 3, 200, 5)) == suite_json(verify_blocks(P, 3, 200, 5)));
}

TEST_CASE("longest flags") {
    CHECK(max_tilting_length(Parameter::Rational(3, 2), 1, 6) == 24);
    CHECK(max_tilting_length(Parameter::Generic(), 0, 6) <= 24);
}
