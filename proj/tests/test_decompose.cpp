#include "helpers.hpp"
#include "spec_grid.hpp"

#include "polytran/decompose.hpp"
#include "polytran/errors.hpp"
#include "polytran/membership.hpp"
#include "polytran/oracle.hpp"
#include "polytran/perturbation.hpp"

#include <doctest.h>

#include <algorithm>

using namespace polytran;
using testing::mat;
using testing::Rng;

namespace {

bool contains_term(const Decomposition& d, const Rat& weight, const TransportMatrix& vertex) {
    return std::any_of(d.terms.begin(), d.terms.end(),
                       [&](const DecompositionTerm& t) { return t.weight == weight && t.vertex == vertex; });
}

}  // namespace

TEST_CASE("extreme points are exactly the integral members") {
    CHECK(is_extreme(mat({{"1", "0"}, {"0", "1"}}), testing::doubly_stochastic(2)));
    CHECK_FALSE(is_extreme(mat({{"1/2", "1/2"}, {"1/2", "1/2"}}), testing::doubly_stochastic(2)));
    CHECK(is_extreme(mat({{"1", "0"}, {"0", "0"}}), testing::substochastic(2, 2)));
    CHECK_THROWS_AS(is_extreme(mat({{"1", "1"}, {"1", "1"}}), testing::doubly_stochastic(2)), NotAMember);
}

TEST_CASE("uniform doubly stochastic matrix splits into the two permutations") {
    const auto d = decompose(mat({{"1/2", "1/2"}, {"1/2", "1/2"}}), testing::doubly_stochastic(2));
    REQUIRE(d.terms.size() == 2);
    CHECK(contains_term(d, Rat(1, 2), mat({{"1", "0"}, {"0", "1"}})));
    CHECK(contains_term(d, Rat(1, 2), mat({{"0", "1"}, {"1", "0"}})));
}

TEST_CASE("isolated fraction splits into the zero matrix and a unit matrix") {
    const auto d = decompose(mat({{"1/2", "0"}, {"0", "0"}}), testing::substochastic(2, 2));
    REQUIRE(d.terms.size() == 2);
    CHECK(contains_term(d, Rat(1, 2), mat({{"0", "0"}, {"0", "0"}})));
    CHECK(contains_term(d, Rat(1, 2), mat({{"1", "0"}, {"0", "0"}})));
}

TEST_CASE("fixed-sum instance splits into fixed-sum vertices") {
    const BoundsSpec spec(2, 2, {0, 0}, {1, 1}, {0, 0}, {1, 1}, 1);
    const auto d = decompose(mat({{"1/2", "0"}, {"0", "1/2"}}), spec);
    REQUIRE(d.terms.size() == 2);
    CHECK(contains_term(d, Rat(1, 2), mat({{"1", "0"}, {"0", "0"}})));
    CHECK(contains_term(d, Rat(1, 2), mat({{"0", "0"}, {"0", "1"}})));
    for (const auto& term : d.terms) CHECK(term.vertex.sigma() == 1);
}

TEST_CASE("integral members decompose into a single unit-weight term") {
    const auto a = mat({{"1", "0"}, {"0", "1"}});
    const auto d = decompose(a, testing::doubly_stochastic(2));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms[0].weight == 1);
    CHECK(d.terms[0].vertex == a);
}

TEST_CASE("decompose rejects non-members") {
    CHECK_THROWS_AS(decompose(mat({{"1", "1"}, {"1", "1"}}), testing::doubly_stochastic(2)), NotAMember);
}

TEST_CASE("verifier accepts decomposer output and rejects tampering") {
    const auto spec = testing::doubly_stochastic(2);
    const auto a = mat({{"1/2", "1/2"}, {"1/2", "1/2"}});
    auto d = decompose(a, spec);
    CHECK(verify_certificate(a, d, spec).ok);

    SUBCASE("weights must sum to one") {
        d.terms[0].weight = Rat(1, 3);
        const auto result = verify_certificate(a, d, spec);
        CHECK_FALSE(result.ok);
        REQUIRE_FALSE(result.diagnostics.empty());
        CHECK(result.diagnostics[0] == "weights sum to 5/6");
    }
    SUBCASE("vertices must be integral") {
        d.terms[0].vertex.at(0, 0) = Rat(1, 2);
        CHECK_FALSE(verify_certificate(a, d, spec).ok);
    }
    SUBCASE("vertices must be members") {
        d.terms[0].vertex = mat({{"1", "1"}, {"0", "0"}});
        CHECK_FALSE(verify_certificate(a, d, spec).ok);
    }
    SUBCASE("duplicate vertices are rejected") {
        d.terms[1].vertex = d.terms[0].vertex;
        CHECK_FALSE(verify_certificate(a, d, spec).ok);
    }
    SUBCASE("reconstruction must match the matrix") {
        const auto result = verify_certificate(mat({{"1", "0"}, {"0", "1"}}), d, spec);
        CHECK_FALSE(result.ok);
    }
    SUBCASE("empty certificates are rejected") {
        const auto result = verify_certificate(a, Decomposition{}, spec);
        CHECK_FALSE(result.ok);
        CHECK(result.diagnostics[0] == "certificate has no terms");
    }
}

TEST_CASE("round-trip and vertex-subset properties over the grid") {
    Rng rng(0xDEC0);
    int round_trips = 0;
    for (const auto& spec : testing::spec_grid(10)) {
        const auto vs = enumerate_vertices(spec);
        if (vs.vertices.empty()) continue;
        for (int draw = 0; draw < 2; ++draw) {
            const auto a = random_hull_point(vs, rng.next());
            DecomposeStats stats;
            const auto d = decompose(a, spec, &stats);
            CHECK(verify_certificate(a, d, spec).ok);
            ++round_trips;

            // Every produced vertex appears in the enumerated vertex set.
            for (const auto& term : d.terms) {
                CHECK(std::find(vs.vertices.begin(), vs.vertices.end(), term.vertex) != vs.vertices.end());
            }

            const int potential = fractional_potential(a);
            CHECK(stats.max_depth <= potential);
            CHECK(d.terms.size() <= (1ULL << potential));
            CHECK((d.terms.size() == 1) == is_extreme(a, spec));
        }
    }
    CHECK(round_trips >= 100);
}

TEST_CASE("integral and membership predicates agree with enumeration on small instances") {
    // Every binary matrix is either in the enumerated vertex set or fails
    // the membership-plus-integrality predicate; checked on a 3x4 instance.
    const BoundsSpec spec(3, 4, {0, 1, 0}, {2, 2, 1}, {0, 0, 1, 0}, {1, 2, 2, 1});
    const auto vs = enumerate_vertices(spec);
    int members = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << 12); ++mask) {
        TransportMatrix a(3, 4);
        for (int b = 0; b < 12; ++b) {
            if ((mask >> b) & 1ULL) a.at(b / 4, b % 4) = 1;
        }
        const bool predicate = a.is_integral() && is_member(a, spec);
        const bool enumerated = std::find(vs.vertices.begin(), vs.vertices.end(), a) != vs.vertices.end();
        CHECK(predicate == enumerated);
        if (enumerated) ++members;
    }
    CHECK(members == static_cast<int>(vs.vertices.size()));
}
