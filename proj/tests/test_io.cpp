#include <doctest.h>

#include "motivic/formulas.hpp"
#include "motivic/serialize.hpp"
#include "test_util.hpp"

using namespace motivic;
using testutil::Rng;

namespace {
const MClass L = MClass::lefschetz();
} // namespace

TEST_SUITE("io") {

TEST_CASE("MClass JSON schema and round trip") {
    MClass c = MClass::fraction(IntPoly::monomial(2, Integer("123456789012345678901234567890")) -
                                    IntPoly::constant(1),
                                IntPoly::monomial(1) - IntPoly::constant(1));
    json j = to_json(c);
    REQUIRE(j.contains("num"));
    REQUIRE(j.contains("den"));
    // exponents ascending, coefficients as decimal strings
    CHECK(j["num"][0][0].get<unsigned>() < j["num"][1][0].get<unsigned>());
    CHECK(j["num"][0][1].is_string());
    CHECK(mclass_from_json(j) == c);
    Rng rng(88);
    for (int i = 0; i < 30; ++i) {
        MClass a = testutil::random_mclass(rng, 3, 9);
        CHECK(mclass_from_json(to_json(a)) == a);
    }
}

TEST_CASE("MSeries JSON round trip") {
    Rng rng(99);
    MSeries s = testutil::random_series(rng, 5);
    json j = to_json(s);
    CHECK(j["order"] == 5);
    CHECK(j["coeffs"].size() == 6);
    CHECK(mseries_from_json(j) == s);
}

TEST_CASE("count record serialization") {
    CountRecord rec;
    rec.space = "quot-a1";
    rec.n = 2;
    rec.q = 3;
    rec.r = 2;
    rec.count = GroupoidCount::of(Integer(96), Integer(48));
    rec.elapsed_ms = 1.5;
    json j = to_json(rec);
    CHECK(j["space"] == "quot-a1");
    CHECK(j["raw"] == "96");
    CHECK(j["group_order"] == "48");
    CHECK(j["value"] == "2");
    CHECK(j["r"] == 2);
    std::string row = to_csv_row(rec);
    CHECK(row.find("quot-a1,2,3,2,96,48,2,") == 0);
    CHECK(csv_header_count() == "space,n,q,r,raw,group_order,value,elapsed_ms");
}

TEST_CASE("identity report serialization") {
    IdentityReport rep = verify_euler_identity(3);
    json j = to_json(rep);
    CHECK(j["holds"] == true);
    CHECK(j["per_coefficient"].size() == 4);
    CHECK(j["per_coefficient"][1]["equal"] == true);
    std::string csv = to_csv(rep);
    CHECK(csv.find("name,order,n,lhs,rhs,equal") == 0);
    std::string table = render_table(rep);
    CHECK(table.find("holds") != std::string::npos);
}

TEST_CASE("class expression parser") {
    CHECK(parse_mclass("L") == L);
    CHECK(parse_mclass("L^2-1") == L * L - MClass(1));
    CHECK(parse_mclass("(L-1)*(L+1)") == L * L - MClass(1));
    CHECK(parse_mclass("1/(L^2-1)") == inv(L * L - MClass(1)));
    CHECK(parse_mclass("L^-1") == inv(L));
    CHECK(parse_mclass(" -2*L + 3 ") == MClass(3) - MClass(2) * L);
    CHECK(parse_mclass("L^3/(L-1)/(L+1)") == MClass::lefschetz_power(3) * inv(L * L - MClass(1)));
    CHECK_THROWS_AS(parse_mclass("L +"), contract_violation);
    CHECK_THROWS_AS(parse_mclass("(L"), contract_violation);
    CHECK_THROWS_AS(parse_mclass("x"), contract_violation);
}

TEST_CASE("fibration report serialization") {
    FibrationFailureReport rep = fibration_failure_report();
    json j = to_json(rep);
    CHECK(j["non_multiplicative"] == true);
    CHECK(j["evals"].size() == 2);
    CHECK(j["evals"][0]["q"] == 2);
    CHECK(j["evals"][0]["stratum"] == "4/3");
    CHECK(j["evals"][0]["groupoid_count"] == "4/3");
    std::string table = render_table(rep);
    CHECK(table.find("non-multiplicative") != std::string::npos);
}

} // TEST_SUITE
