#include <doctest.h>

#include "hpgforge/isogeny.hpp"

using namespace hpgforge;

namespace {

RingElement gi(long a, long b) { return {Ring::Gauss, a, b}; }
RingElement ei(long a, long b) { return {Ring::Eisenstein, a, b}; }

Poly gp(const std::vector<std::pair<long, long>>& cs) {
    std::vector<FieldElement> v;
    for (auto [re, im] : cs) v.emplace_back(Ring::Gauss, re, im);
    return Poly(Ring::Gauss, std::move(v));
}

Poly ep(const std::vector<std::pair<long, long>>& cs) {
    std::vector<FieldElement> v;
    for (auto [re, im] : cs) v.emplace_back(Ring::Eisenstein, re, im);
    return Poly(Ring::Eisenstein, std::move(v));
}

}  // namespace

TEST_CASE("doubling the identity gives the printed multiplication-by-2 map") {
    const IsogenyMap one = isogeny(CurveId::E1, gi(1, 0));
    const IsogenyMap two = point_add(one, one);
    const Poly x = Poly::z(Ring::Gauss);
    const Poly c1 = Poly::constant(Ring::Gauss, 1);
    // (x^2+1)^2 / (4x(x^2-1))
    CHECK(two.X.comp[1].is_zero());
    CHECK(two.X.comp[0] == RationalMap(pow(x * x + c1, 2),
                                       Poly::constant(Ring::Gauss, 4) * x * (x * x - c1)));
    CHECK(curve_relation_holds(two));
}

TEST_CASE("identity plus its i-twist gives the 1+i isogeny") {
    const IsogenyMap one = isogeny(CurveId::E1, gi(1, 0));
    const IsogenyMap iid = isogeny(CurveId::E1, gi(0, 1));
    CHECK(iid.X.comp[0] == RationalMap(gp({{0, 0}, {-1, 0}})));  // -x
    const IsogenyMap s = point_add(one, iid);
    const Poly x = Poly::z(Ring::Gauss);
    // (x^2 - 1)/(2 i x)
    CHECK(s.X.comp[0] ==
          RationalMap(x * x - Poly::constant(Ring::Gauss, 1), gp({{0, 0}, {0, 2}})));
    CHECK(curve_relation_holds(s));
}

TEST_CASE("adding the origin is the identity of the group law") {
    const IsogenyMap p = isogeny(CurveId::E1, gi(1, 2));
    IsogenyMap origin;
    origin.curve = CurveId::E1;
    origin.u = gi(0, 0);
    origin.origin = true;
    const IsogenyMap q = point_add(p, origin);
    CHECK(q.X == p.X);
    CHECK(q.Y == p.Y);
    // p + (-p) is the origin
    const IsogenyMap minus = point_add(p, isogeny(CurveId::E1, gi(-1, -2)));
    CHECK(minus.origin);
}

TEST_CASE("printed 1+2i isogeny") {
    const IsogenyMap m = isogeny(CurveId::E1, gi(1, 2));
    const Poly x = Poly::z(Ring::Gauss);
    // x (x^2-1-2i)^2 / ((1+2i) x^2 - 1)^2
    const RationalMap want(x * pow(x * x + gp({{-1, -2}}), 2),
                           pow(gp({{1, 2}}) * x * x - Poly::constant(Ring::Gauss, 1), 2));
    CHECK(m.X.comp[0] == want);
    CHECK(curve_relation_holds(m));
}

TEST_CASE("E2 identity and curve relations at small norm") {
    const IsogenyMap e2one = isogeny(CurveId::E2, ei(1, 0));
    CHECK(e2one.X.comp[0] == RationalMap::z(Ring::Eisenstein));
    IsogenyCache cache;
    for (CurveId c : {CurveId::E1, CurveId::E2, CurveId::E3}) {
        for (const auto& u : canonical_elements_up_to_norm(curve_ring(c), 10)) {
            CHECK(curve_relation_holds(isogeny(c, u, cache)));
        }
    }
}

TEST_CASE("structural decomposition") {
    // phi_{1+i}: mu(s) = (s-1)/(2is), mu0 = -i/2 = 1/(1+i)^2
    const Decomposition d = structural_decompose(isogeny(CurveId::E1, gi(1, 1)));
    const Poly s = Poly::z(Ring::Gauss);
    CHECK(d.mu == RationalMap(s - Poly::constant(Ring::Gauss, 1), gp({{0, 0}, {0, 2}})));
    CHECK(d.mu0 == FieldElement(Ring::Gauss, BigRat(0), make_rat(-1, 2)));

    const Decomposition id = structural_decompose(isogeny(CurveId::E1, gi(1, 0)));
    CHECK(id.mu == RationalMap::constant(field_one(Ring::Gauss)));
    CHECK(id.mu0.is_one());

    // deg mu = floor(d/2) on E1
    IsogenyCache cache;
    for (const auto& u : canonical_elements_up_to_norm(Ring::Gauss, 13)) {
        const Decomposition dd = structural_decompose(isogeny(CurveId::E1, u, cache));
        CHECK(dd.mu.degree() == to_long(norm(u)) / 2);
    }
}

TEST_CASE("kernel facts: mu has a pole at s = 0 exactly in the even cases") {
    IsogenyCache cache;
    for (const auto& u : canonical_elements_up_to_norm(Ring::Gauss, 20)) {
        const Decomposition d = structural_decompose(isogeny(CurveId::E1, u, cache));
        const bool pole_at_0 = d.mu.den().at_zero().is_zero();
        CHECK(pole_at_0 == (norm(u) % 2 == 0));
    }
    for (const auto& u : canonical_elements_up_to_norm(Ring::Eisenstein, 16)) {
        const Decomposition d = structural_decompose(isogeny(CurveId::E2, u, cache));
        const bool pole_at_0 = d.mu.den().at_zero().is_zero();
        CHECK(pole_at_0 == (norm(u) % 3 == 0));
    }
}

TEST_CASE("E3 residue classes select the structural form") {
    IsogenyCache cache;
    for (const auto& u : canonical_elements_up_to_norm(Ring::Eisenstein, 13)) {
        const Decomposition d = structural_decompose(isogeny(CurveId::E3, u, cache));
        CHECK(d.form == e3_form_of(u));  // (a+b) mod 3 = 1, 2, 0 -> F1, F2, F3
    }
}

TEST_CASE("composition of isogenies is multiplication of indices") {
    IsogenyCache cache;
    for (CurveId c : {CurveId::E1, CurveId::E2, CurveId::E3}) {
        const Ring r = curve_ring(c);
        const auto elems = canonical_elements_up_to_norm(r, 5);
        for (const auto& u : elems) {
            for (const auto& v : elems) {
                if (norm(u * v) > 20) continue;
                const IsogenyMap lhs =
                    compose_isogenies(isogeny(c, u, cache), isogeny(c, v, cache));
                const IsogenyMap rhs = isogeny(c, u * v, cache);
                CHECK(lhs.X == rhs.X);
                CHECK(lhs.Y == rhs.Y);
            }
        }
    }
}

TEST_CASE("oracle pullbacks reproduce the printed transformations") {
    const Poly zg = Poly::z(Ring::Gauss);
    CHECK(oracle_pullback(CurveId::E1, gi(1, 1)) ==
          RationalMap(gp({{-4, 0}}) * zg, pow(zg - Poly::constant(Ring::Gauss, 1), 2)));
    const Poly ze = Poly::z(Ring::Eisenstein);
    CHECK(oracle_pullback(CurveId::E2, ei(1, -1)) ==
          RationalMap(ep({{27, 0}}) * ze, pow(ep({{-1, 0}, {4, 0}}), 3)));
    CHECK(oracle_pullback(CurveId::E3, ei(1, -1)) ==
          RationalMap(ep({{3, 6}}) * ze * (ze - Poly::constant(Ring::Eisenstein, 1)),
                      pow(ep({{0, 1}, {1, 0}}), 3)));
}
