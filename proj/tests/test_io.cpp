#include <doctest.h>

#include "gradla/io.hpp"
#include "gradla/oracles.hpp"
#include "gradla/sweeps.hpp"
#include "helpers.hpp"

using namespace gradla;
using io::Json;
using testing_helpers::code_of;

TEST_SUITE("io") {

TEST_CASE("elements and matrices round-trip")
{
    RandomSource rs(5);
    for (const char* name : {"quaternions", "clifford:1,2", "dual_numbers:3", "clock_shift:3", "clock_shift:4"}) {
        GradedAlgebra a = presets::by_name(name);
        INFO(name);
        for (int rep = 0; rep < 20; ++rep) {
            AlgebraElement e = rs.element(a, 0.6);
            // going through text exercises the scalar printer and parser
            Json j = io::parse_json(io::to_json(e).dump(), "test");
            CHECK(io::element_from_json(a, j) == e);
            auto nu = rs.degrees(a.support_subgroup(), 3);
            GradedMatrix m = rs.inhomogeneous(a, nu, nu);
            CHECK(io::matrix_from_json(a, io::to_json(m)) == m);
        }
    }
}

TEST_CASE("algebras and multipliers round-trip")
{
    for (const char* name : {"quaternions", "clifford:2,1", "grassmann:3", "clock_shift:3", "group_algebra:2,3"}) {
        GradedAlgebra a = presets::by_name(name);
        INFO(name);
        GradedAlgebra b = io::algebra_from_json(io::to_json(a));
        CHECK(b.structurally_equal(a));
        CHECK(io::to_json(b) == io::to_json(a));
        for (const auto& s : ns_multipliers(a)) {
            Multiplier t = io::multiplier_from_json(io::to_json(s));
            CHECK(t.same_values(s));
        }
    }
}

TEST_CASE("loading presets and files")
{
    GradedAlgebra h = io::load_algebra("preset:quaternions");
    CHECK(h.structurally_equal(presets::quaternions()));
    CHECK(io::load_algebra("preset:clifford:0,2").dim() == 4);
    CHECK(code_of([] { io::load_algebra("/nonexistent/algebra.json"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::load_algebra("preset:octonions"); }) == ErrorCode::ParseError);
}

TEST_CASE("scalars")
{
    CHECK(io::scalar_from_json(Json(3), 4) == CycloScalar(3));
    CHECK(io::scalar_from_json(Json("z"), 4) == CycloScalar::root_of_unity(1, 4));
    CHECK(io::scalar_from_json(Json("1/2 + 3*z^2"), 4) == CycloScalar(Rational(-5) / 2));
    CHECK(code_of([] { io::scalar_from_json(Json(1.5), 4); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::scalar_from_json(Json("1/"), 4); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed documents")
{
    GradedAlgebra h = presets::quaternions();
    Json good = io::to_json(h);
    auto load = [](Json j) { return [j] { io::algebra_from_json(j); }; };

    Json j = good;
    j.erase("basis");
    CHECK(code_of(load(j)) == ErrorCode::ParseError);
    j = good;
    j["basis"][1]["degree"] = {0, 1};
    CHECK(code_of(load(j)) == ErrorCode::ParseError);
    j = good;
    j["table"]["i,q"] = Json::array();
    CHECK(code_of(load(j)) == ErrorCode::ParseError);
    j = good;
    j["table"]["ij"] = Json::array();
    CHECK(code_of(load(j)) == ErrorCode::ParseError);
    j = good;
    j["root_order"] = "two";
    CHECK(code_of(load(j)) == ErrorCode::ParseError);
    // structural problems pass through with the algebra's own error codes
    j = good;
    j["table"]["i,j"] = Json::array({{{"k", "k"}, {"c", "-1"}}});
    CHECK(code_of(load(j)) == ErrorCode::NotLambdaCommutative);
    j = good;
    j["table"]["i,j"] = Json::array({{{"k", "j"}, {"c", "1"}}});
    CHECK(code_of(load(j)) == ErrorCode::DegreeViolation);

    Json m = {{"row_degrees", {{0, 0, 0}}}, {"entries", {{Json::array({{{"b", "q"}, {"c", "1"}}})}}}};
    CHECK(code_of([&] { io::matrix_from_json(h, m); }) == ErrorCode::ParseError);
    m["entries"] = {{Json::array(), Json::array()}};
    CHECK(code_of([&] { io::matrix_from_json(h, m); }) == ErrorCode::ParseError);
    CHECK(code_of([] { io::parse_json("{\"a\": ", "inline"); }) == ErrorCode::ParseError);
}

TEST_CASE("degree override and result documents")
{
    GradedAlgebra h = presets::quaternions();
    GroupElement o = h.group().zero(), jt = h.basis("j").degree();
    GradedMatrix x = testing_helpers::mat(h, {o, jt}, {h.one(), h.basis("j"), h.basis("j"), h.one()});
    GradedMatrix y = io::override_degrees(x, Json::parse("[[0,0,0],[0,0,0]]"));
    CHECK(y.row_degrees() == std::vector<GroupElement>{o, o});
    CHECK(y.col_degrees() == std::vector<GroupElement>{o, o});
    GradedMatrix z = io::override_degrees(x, Json::parse(R"({"col_degrees": [[0,0,0],[0,0,0]]})"));
    CHECK(z.row_degrees() == x.row_degrees());
    CHECK(code_of([&] { io::override_degrees(x, Json::parse("[[0,0,0]]")); }) == ErrorCode::ParseError);

    Json doc = io::result_document(gdet0(x));
    CHECK(doc.dump() == R"({"degree":[0,0,0],"format":1,"result":[{"b":"1","c":"2"}]})");
    doc = io::result_document(h.one() + h.basis("i"));
    CHECK(doc["degree"] == "inhomogeneous");
    CHECK(io::element_from_json(h, doc["result"]) == h.one() + h.basis("i"));
}

TEST_CASE("sweep entry point")
{
    SweepConfig cfg;
    cfg.instances = 5;
    cfg.orderings = 3;
    auto a = run_property_sweeps("crossed", cfg), b = run_property_sweeps("crossed", cfg);
    REQUIRE(a.size() == 1);
    CHECK(a[0].ok());
    CHECK(a[0].instances == b[0].instances);
    CHECK(code_of([&] { run_property_sweeps("bogus", cfg); }) == ErrorCode::InvalidParams);
    CHECK(sweep_suites().size() == 10);
}

}
