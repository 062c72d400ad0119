#include "hlv/bases.hpp"
#include "hlv/json_io.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace hlv;

TEST_CASE("wire format of scalars")
{
    CHECK(to_json(testing_support::poly({1, 0, -1})).dump() == R"(["1/1","0/1","-1/1"])");
    CHECK(to_json(TPoly()).dump() == "[]");
    CHECK(to_json(Partition({3, 1})).dump() == "[3,1]");
    CHECK(to_json(TRational(1)).dump() == R"({"den":["1/1"],"num":["1/1"]})");
}

TEST_CASE("property: JSON round trips")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const SymFunc f = testing_support::random_symfunc(rng, 5);
        CHECK(symfunc_from_json(Json::parse(to_json(f).dump())) == f);
        const TRational c = testing_support::random_coeff(rng);
        CHECK(trational_from_json(to_json(c)) == c);
        CHECK(tpoly_from_json(to_json(c.num())) == c.num());
    }
    const Composition comp({2, -1, 0, 3});
    CHECK(composition_from_json(to_json(comp)).parts() == comp.parts());
    CHECK(partition_from_json(to_json(Partition({4, 2, 2}))) == Partition({4, 2, 2}));

    const MultiPoly poly = specialize_vars(hl_Q(Composition({2, 1})), 3);
    CHECK(multipoly_from_json(Json::parse(to_json(poly).dump())) == poly);
    CHECK(multipoly_from_json(to_json(MultiPoly(2))) == MultiPoly());

    for (ScanKind kind : {ScanKind::Skew, ScanKind::SkewB, ScanKind::Hall}) {
        const StabilityReport report = stability_scan({1}, {1}, {}, 6, kind);
        const StabilityReport back = stability_report_from_json(Json::parse(to_json(report).dump()));
        CHECK(back.lambda == report.lambda);
        CHECK(back.mu == report.mu);
        CHECK(back.nu == report.nu);
        CHECK(back.kind == report.kind);
        CHECK(back.offset == report.offset);
        CHECK(back.samples == report.samples);
        CHECK(back.onset == report.onset);
        CHECK(back.stable_value == report.stable_value);
        CHECK(back.theorem_bound == report.theorem_bound);
    }
}

TEST_CASE("stability report fields")
{
    const Json j = to_json(stability_scan({}, {}, {}, 6));
    CHECK(j.at("lambda") == Json::array());
    CHECK(j.at("offset") == 0);
    CHECK(j.at("onset") == 1);
    CHECK(j.at("bound") == 0);
    CHECK(j.at("kind") == "skew");
    CHECK(j.at("samples").front().at("m") == -1);
    CHECK(trational_from_json(j.at("stable")) == testing_support::one_minus_t());
}

TEST_CASE("malformed input is rejected")
{
    CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), std::invalid_argument);
    CHECK_THROWS_AS(partition_from_json(Json::parse(R"(["a"])")), std::invalid_argument);
    CHECK_THROWS_AS(tpoly_from_json(Json::parse("[1]")), std::invalid_argument);
    CHECK_THROWS_AS(tpoly_from_json(Json::parse(R"(["1/0"])")), std::invalid_argument);
    CHECK_THROWS_AS(trational_from_json(Json::parse(R"({"num":["1/1"]})")), std::invalid_argument);
    CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"basis":"m","terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(multipoly_from_json(Json::parse(
                        R"([{"exponents":[1],"coeff":{"num":["1/1"],"den":["1/1"]}},{"exponents":[1,1],"coeff":{"num":["1/1"],"den":["1/1"]}}])")),
                    std::invalid_argument);
}
