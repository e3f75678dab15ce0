#include <doctest.h>

#include <random>

#include "hpgforge/ring.hpp"

using namespace hpgforge;

namespace {

RingElement gi(long a, long b) { return {Ring::Gauss, a, b}; }
RingElement ei(long a, long b) { return {Ring::Eisenstein, a, b}; }

std::mt19937 rng(20240817);

RingElement random_elem(Ring r, long lim) {
    std::uniform_int_distribution<long> d(-lim, lim);
    while (true) {
        RingElement u(r, d(rng), d(rng));
        if (!u.is_zero()) return u;
    }
}

}  // namespace

TEST_CASE("norms of small elements") {
    CHECK(norm(gi(2, 1)) == 5);
    CHECK(norm(ei(2, -1)) == 7);
    CHECK(gi(1, 1) * gi(1, -1) == gi(2, 0));
}

TEST_CASE("norm is multiplicative") {
    for (int k = 0; k < 1000; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        const RingElement x = random_elem(r, 40), y = random_elem(r, 40);
        CHECK(norm(x * y) == norm(x) * norm(y));
    }
}

TEST_CASE("units") {
    const auto gu = units(Ring::Gauss);
    REQUIRE(gu.size() == 4);
    CHECK(gu[0] == gi(1, 0));
    CHECK(gu[1] == gi(0, 1));
    CHECK(gu[2] == gi(-1, 0));
    CHECK(gu[3] == gi(0, -1));
    const auto eu = units(Ring::Eisenstein);
    REQUIRE(eu.size() == 6);
    for (const auto& e : eu) CHECK(norm(e) == 1);
    // closed under multiplication
    for (const auto& a : eu)
        for (const auto& b : eu) CHECK(norm(a * b) == 1);
}

TEST_CASE("conjugation") {
    const RingElement u = ei(3, 2);
    CHECK(u * conj(u) == ei(7, 0));  // norm(3+2w) = 9 - 6 + 4 = 7
    CHECK(conj(conj(u)) == u);
}

TEST_CASE("canonical representatives") {
    CHECK(canonical_rep(gi(-1, 2)) == gi(2, 1));
    CHECK(canonical_rep(gi(2, 1)) == gi(2, 1));
    // enumerate the six associates of 1+3w and pick the sector member by hand
    const RingElement u = ei(1, 3);
    RingElement expect = u;
    bool found = false;
    for (const auto& e : units(Ring::Eisenstein)) {
        const RingElement v = u * e;
        if (v.b >= 0 && v.a > v.b) {
            expect = v;
            found = true;
        }
    }
    REQUIRE(found);
    CHECK(expect == ei(3, 2));
    CHECK(canonical_rep(u) == expect);
}

TEST_CASE("canonical_rep is idempotent and constant on associate classes") {
    for (int k = 0; k < 200; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        const RingElement u = random_elem(r, 30);
        const RingElement cu = canonical_rep(u);
        CHECK(canonical_rep(cu) == cu);
        CHECK(is_canonical(cu));
        for (const auto& e : units(r)) CHECK(canonical_rep(u * e) == cu);
    }
}

TEST_CASE("elements_of_norm") {
    CHECK(elements_of_norm(BigInt(21), Ring::Gauss).empty());
    const auto five = elements_of_norm(BigInt(5), Ring::Gauss);
    REQUIRE(five.size() == 2);
    CHECK(five[0] == gi(2, 1));
    CHECK(five[1] == gi(1, 2));
    const auto one = elements_of_norm(BigInt(1), Ring::Gauss);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == gi(1, 0));
}

TEST_CASE("gauss norm search agrees with a direct two-squares scan") {
    for (long d = 1; d <= 200; ++d) {
        bool representable = false;
        for (long a = 0; a * a <= d && !representable; ++a) {
            const long rem = d - a * a;
            const long b = static_cast<long>(std::sqrt(static_cast<double>(rem)));
            for (long bb = std::max(0L, b - 1); bb <= b + 1; ++bb)
                if (a * a + bb * bb == d) representable = true;
        }
        CHECK(elements_of_norm(BigInt(d), Ring::Gauss).empty() == !representable);
    }
}

TEST_CASE("eisenstein norm search catches wide coordinates") {
    // norm(8+3w) = 64 - 24 + 9 = 49, coordinate above ceil(sqrt 49)
    const auto v = elements_of_norm(BigInt(49), Ring::Eisenstein);
    bool has = false;
    for (const auto& u : v) has = has || (u == ei(8, 3));
    CHECK(has);
}

TEST_CASE("string round trips") {
    CHECK(to_string(gi(2, 1)) == "2+1*i");
    CHECK(to_string(ei(-1, 2)) == "-1+2*w");
    CHECK(parse_ring_element("2+1i", Ring::Gauss) == gi(2, 1));
    CHECK(parse_ring_element(" 2 + i ", Ring::Gauss) == gi(2, 1));
    CHECK(parse_ring_element("-i", Ring::Gauss) == gi(0, -1));
    CHECK(parse_ring_element("3", Ring::Gauss) == gi(3, 0));
    CHECK(parse_ring_element("1-2w", Ring::Eisenstein) == ei(1, -2));
    CHECK(parse_ring_element("2+1*w", Ring::Eisenstein) == ei(2, 1));
    CHECK(parse_ring_element(to_string(ei(-7, 5)), Ring::Eisenstein) == ei(-7, 5));
    CHECK_THROWS(parse_ring_element("2+1q", Ring::Gauss));
}

TEST_CASE("ring tag mismatch is rejected") {
    CHECK_THROWS(gi(1, 0) + ei(1, 0));
    CHECK_THROWS(gi(1, 0) * ei(1, 0));
    CHECK_THROWS(FieldElement(Ring::Gauss, 1, 0) / FieldElement(Ring::Eisenstein, 1, 0));
}

TEST_CASE("field arithmetic") {
    const FieldElement x(Ring::Eisenstein, make_rat(3, 2), make_rat(-1, 3));
    CHECK(x * inverse(x) == field_one(Ring::Eisenstein));
    CHECK(conj(x) * x == FieldElement(Ring::Eisenstein, norm(x), BigRat(0)));
    const FieldElement i = unit_i(Ring::Gauss);
    CHECK(i * i == FieldElement(Ring::Gauss, -1, 0));
    const FieldElement w = unit_omega(Ring::Eisenstein);
    CHECK(w * w * w == field_one(Ring::Eisenstein));
    CHECK_THROWS(inverse(field_zero(Ring::Gauss)));
}

TEST_CASE("ring gcd") {
    // 6+8i = (2+i) * (4+2i), so 4+2i divides both inputs exactly
    const RingElement g = ring_gcd(gi(6, 8), gi(4, 2));
    CHECK(divides(g, gi(6, 8)));
    CHECK(divides(g, gi(4, 2)));
    CHECK(norm(g) == 20);
    for (int k = 0; k < 100; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        const RingElement x = random_elem(r, 20), y = random_elem(r, 20);
        const RingElement d = ring_gcd(x, y);
        CHECK(divides(d, x));
        CHECK(divides(d, y));
    }
}
