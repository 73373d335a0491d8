#include <doctest.h>

#include "rootchar/catalog.hpp"
#include "rootchar/json_io.hpp"

using namespace rootchar;

TEST_CASE("rationals and vectors") {
    CHECK(to_json(Rational::parse("-6/4")) == "-3/2");
    CHECK(rational_from_json(Json("4/6")) == Rational::parse("2/3"));
    CHECK(rational_from_json(Json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), InvalidInput);
    CHECK_THROWS_AS(rational_from_json(Json("x")), InvalidInput);
    CHECK(vector_from_json(Json::parse(R"(["1", 2, "-1/2"])")) == Vector{1, 2, Rational::parse("-1/2")});
    CHECK_THROWS_AS(vector_from_json(Json::parse(R"([1, 2])"), 3), InvalidInput);
    CHECK(to_json(Vector{1, Rational::parse("1/3")}).dump() == R"(["1","1/3"])");
}

TEST_CASE("support maps round-trip") {
    const auto m = standard_finite("B3").positive_support();
    CHECK(support_map_from_json(to_json(m)) == m);
    const SignedSupportMap s(1, {{Vector{1}, -1}, {Vector{2}, 1}});
    CHECK(signed_support_map_from_json(to_json(s)) == s);

    CHECK_THROWS_WITH_AS(support_map_from_json(Json::parse(R"({"dim":1,"entries":[{"v":["0"],"m":1}]})")),
                         "m(0) must be 0", InvalidInput);
    CHECK_THROWS_AS(support_map_from_json(Json::parse(R"({"dim":1,"entries":[{"v":["1"],"m":1},{"v":["1"],"m":1}]})")),
                    InvalidInput);
    CHECK_THROWS_AS(support_map_from_json(Json::parse(R"({"entries":[]})")), InvalidInput);
    CHECK_THROWS_AS(support_map_from_json(Json::parse(R"({"dim":2,"entries":[{"v":["1"],"m":1}]})")), InvalidInput);
    CHECK_THROWS_AS(support_map_from_json(Json::parse(R"([1,2])")), InvalidInput);
}

TEST_CASE("group ring elements and root systems round-trip") {
    const auto x = expand_product(standard_finite("A2").positive_support());
    CHECK(group_ring_from_json(to_json(x)) == x);
    const auto r = standard_finite("G2").system();
    CHECK(root_system_from_json(to_json(r)) == r);
}

TEST_CASE("affine specs round-trip") {
    const auto g = untwisted_affine("A2", 3);
    const auto back = affine_spec_from_json(to_json(g));
    CHECK(enumerate_support(back) == enumerate_support(g));
    CHECK(back.grading == g.grading);
    CHECK(back.cutoff == g.cutoff);

    AffineSupportSpec e = g;
    e.kind = ExplicitSupport{enumerate_support(g)};
    const auto eb = affine_spec_from_json(to_json(e));
    CHECK(enumerate_support(eb) == enumerate_support(e));

    const auto text = R"({"dim":1,"kind":"generated","roots":[["1"],["-1"]],"grading":{"level":"1","v":["1/3"]},
                          "cutoff":"5","periods":[{"v":["1"],"u":"1"},{"v":["-1"],"u":"1"}],
                          "imaginary_multiplicity":2})";
    const auto p = affine_spec_from_json(parse_json(text));
    CHECK(std::get<GeneratedSupport>(p.kind).imaginary_multiplicity == 2);
    CHECK_THROWS_AS(affine_spec_from_json(parse_json(R"({"dim":1,"kind":"other","grading":{"level":"1","v":["0"]},"cutoff":"1"})")),
                    InvalidInput);
}

TEST_CASE("parse errors are malformed input") {
    CHECK_THROWS_AS(parse_json("{not json"), InvalidInput);
    try {
        parse_json("[1,");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("malformed input") != std::string::npos);
    }
}

TEST_CASE("verdict JSON carries the expected fields") {
    const auto v = to_json(characterize_finite(standard_finite("A2").positive_support()));
    CHECK(v["on_sphere"] == true);
    CHECK(v["type"] == "A2");
    CHECK(v["fit"]["radius_sq"] == "2");
    CHECK(v["axioms"]["FR5"] == true);
    const auto a = to_json(characterize_affine(untwisted_affine("A1", 3)));
    CHECK(a["on_paraboloid"] == true);
    CHECK(a["cutoff"] == "3");
    CHECK(a["axioms_at_level"]["AR4'"] == true);
    const auto no = to_json(characterize_finite(SupportMap(1, {{Vector{1}, 2}})));
    CHECK(no["fit"].is_null());
}
