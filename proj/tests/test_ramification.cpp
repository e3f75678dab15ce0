#include <doctest.h>

#include "hpgforge/ramification.hpp"
#include "hpgforge/triple.hpp"

using namespace hpgforge;

namespace {

RingElement gi(long a, long b) { return {Ring::Gauss, a, b}; }
RingElement ei(long a, long b) { return {Ring::Eisenstein, a, b}; }

}  // namespace

TEST_CASE("pattern of the degree-2 map") {
    const RationalMap phi = to_transformation(triple_for_element(Family::E1, gi(1, 1))).phi;
    const RamificationPattern p = ramify(phi);
    CHECK(p.degree == 2);
    CHECK(p.over0 == std::vector<long>{1, 1});
    CHECK(p.over1 == std::vector<long>{2});
    CHECK(p.overInf == std::vector<long>{2});
    CHECK(distinct_point_count(p) == 4);
    const ExpTriple e = side_exponents(FuncSide::F144);
    const auto row = match_table1(p, e, e);
    REQUIRE(row.has_value());
    CHECK(*row == 3);  // degree 4n+2 with n = 0
}

TEST_CASE("identity map") {
    const RationalMap phi = RationalMap::z(Ring::Gauss);
    const RamificationPattern p = ramify(phi);
    CHECK(p.over0 == std::vector<long>{1});
    CHECK(p.over1 == std::vector<long>{1});
    CHECK(p.overInf == std::vector<long>{1});
    const ExpTriple e = side_exponents(FuncSide::F144);
    CHECK(match_table1(p, e, e) == 2);  // 4n+1 with n = 0
}

TEST_CASE("degree-4 map matches the first table row") {
    const RationalMap phi = to_transformation(triple_for_element(Family::E1, gi(2, 0))).phi;
    const RamificationPattern p = ramify(phi);
    CHECK(p.degree == 4);
    CHECK(p.over0 == std::vector<long>{2, 1, 1});
    CHECK(p.over1 == std::vector<long>{2, 2});
    CHECK(p.overInf == std::vector<long>{4});
    const ExpTriple e = side_exponents(FuncSide::F144);
    CHECK(match_table1(p, e, e) == 1);
}

TEST_CASE("degree-5 map matches the 4n+1 row") {
    const RationalMap phi = to_transformation(triple_for_element(Family::E1, gi(1, 2))).phi;
    const ExpTriple e = side_exponents(FuncSide::F144);
    CHECK(match_table1(ramify(phi), e, e) == 2);
}

TEST_CASE("composed cross maps match the cross rows") {
    const Transformation q3 = quadratic_cross(CrossKind::E3_TO_E2);
    {
        const RamificationPattern p = ramify(q3.phi);
        const auto row =
            match_table1(p, side_exponents(FuncSide::F333), side_exponents(FuncSide::F126));
        CHECK(row == 10);  // 6n+2 with n = 0
    }
    {
        const Transformation qh = quadratic_cross(CrossKind::HYPER_TO_E2);
        const auto row = match_table1(ramify(qh.phi), side_exponents(FuncSide::FHyp),
                                      side_exponents(FuncSide::F126));
        CHECK(row == 13);
    }
    {
        // degree 6: quadratic composed with a degree-3 isogeny
        const Transformation three =
            to_transformation(triple_for_element(Family::E2, ei(1, -1)));
        const Transformation comp = compose_transformations(three, q3);
        CHECK(comp.phi.degree() == 6);
        const auto row = match_table1(ramify(comp.phi), side_exponents(FuncSide::F333),
                                      side_exponents(FuncSide::F126));
        REQUIRE(row.has_value());
        CHECK((*row == 8 || *row == 9));
    }
}

TEST_CASE("a generic non-Belyi map matches nothing") {
    const Ring r = Ring::Gauss;
    const Poly z = Poly::z(r);
    const RationalMap phi(z * z * z + FieldElement(r, 5) * z, Poly::constant(r, 1));
    const ExpTriple e = side_exponents(FuncSide::F144);
    CHECK_FALSE(match_table1(ramify(phi), e, e).has_value());
}

TEST_CASE("hurwitz count and unique rows at small norm") {
    TripleCache cache;
    for (Family f : {Family::E1, Family::E2, Family::E3}) {
        const ExpTriple e = side_exponents(family_side(f));
        for (const auto& u : canonical_elements_up_to_norm(family_ring(f), 15)) {
            const RamificationPattern p = ramify(to_transformation(generate(f, u, cache)).phi);
            CHECK(distinct_point_count(p) == p.degree + 2);
            CHECK(match_table1(p, e, e).has_value());
        }
    }
}

TEST_CASE("table notation printer") {
    const RationalMap phi = to_transformation(triple_for_element(Family::E1, gi(2, 0))).phi;
    CHECK(pattern_to_string(ramify(phi)) == "1*2+2*1 = 2*2 = 1*4");
}
