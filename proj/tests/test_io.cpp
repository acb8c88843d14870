#include "helpers.hpp"

#include "polytran/decompose.hpp"
#include "polytran/errors.hpp"
#include "polytran/io.hpp"
#include "polytran/oracle.hpp"

#include <doctest.h>

using namespace polytran;
using nlohmann::json;
using testing::mat;
using testing::Rng;

TEST_CASE("spec documents round-trip") {
    const BoundsSpec spec(2, 3, {0, 1}, {1, 2}, {0, 0, 1}, {1, 1, 2}, 2);
    const auto doc = spec_to_json(spec);
    CHECK(spec_from_json(doc) == spec);
    CHECK(doc.at("k") == 2);

    const auto no_total = spec_to_json(testing::substochastic(2, 2));
    CHECK(no_total.at("k").is_null());
    CHECK_FALSE(spec_from_json(no_total).total().has_value());
}

TEST_CASE("spec parsing reports the offending field") {
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"n":2,"m":2})")), ParseError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"n":2,"m":2,"r":[0,"x"],"R":[1,1],"c":[0,0],"C":[1,1]})")),
                    ParseError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"([1,2,3])")), ParseError);
}

TEST_CASE("matrix JSON round-trips exactly") {
    Rng rng(0x10);
    TransportMatrix a(3, 2);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 2; ++j) a.at(i, j) = rng.small_rational();
    }
    CHECK(matrix_from_json(matrix_to_json(a)) == a);
}

TEST_CASE("matrix JSON accepts integers and rejects floats") {
    CHECK(matrix_from_json(json::parse(R"([[1,0],["1/2","0.5"]])")) == mat({{"1", "0"}, {"1/2", "1/2"}}));
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[0.5]])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1,0],[1]])")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([])")), ParseError);
}

TEST_CASE("matrix CSV round-trips exactly") {
    const auto a = mat({{"1/2", "-3", "0"}, {"2/7", "1", "0.25"}});
    CHECK(matrix_from_csv(matrix_to_csv(a)) == a);
    CHECK(matrix_from_csv("1/2, 1/2\n0 , 1\n") == mat({{"1/2", "1/2"}, {"0", "1"}}));
}

TEST_CASE("matrix CSV reports the offending line") {
    try {
        matrix_from_csv("1,2\n3\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("line 2") != std::string::npos);
    }
    try {
        matrix_from_csv("1,x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(std::string(err.what()).find("'x'") != std::string::npos);
    }
}

TEST_CASE("decomposition documents round-trip") {
    const auto spec = testing::doubly_stochastic(2);
    const auto d = decompose(mat({{"1/2", "1/2"}, {"1/2", "1/2"}}), spec);
    const auto doc = decomposition_to_json(d);
    const auto back = decomposition_from_json(doc);
    REQUIRE(back.terms.size() == d.terms.size());
    for (std::size_t t = 0; t < d.terms.size(); ++t) {
        CHECK(back.terms[t].weight == d.terms[t].weight);
        CHECK(back.terms[t].vertex == d.terms[t].vertex);
    }
    CHECK(doc.at("terms")[0].at("weight") == "1/2");
}

TEST_CASE("decimal rendering replaces rational strings only") {
    const json doc{{"weight", "1/3"}, {"status", "ok"}, {"matrix", json::array({json::array({"1/2", "2"})})}};
    const auto rendered = render_decimals(doc, 3);
    CHECK(rendered.at("weight") == "0.333");
    CHECK(rendered.at("status") == "ok");
    CHECK(rendered.at("matrix")[0][0] == "0.500");
    CHECK(rendered.at("matrix")[0][1] == "2.000");
}
