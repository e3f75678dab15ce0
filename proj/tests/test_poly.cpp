#include <doctest.h>

#include <random>

#include "hpgforge/rational_map.hpp"

using namespace hpgforge;

namespace {

std::mt19937 rng(987123);

FieldElement random_fe(Ring r) {
    std::uniform_int_distribution<long> d(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    return FieldElement(r, make_rat(d(rng), den(rng)), make_rat(d(rng), den(rng)));
}

Poly random_poly(Ring r, long deg) {
    std::vector<FieldElement> c;
    for (long k = 0; k <= deg; ++k) c.push_back(random_fe(r));
    if (c.back().is_zero()) c.back() = field_one(r);
    return Poly(r, std::move(c));
}

Poly gpoly(std::initializer_list<long> re) {
    std::vector<FieldElement> c;
    for (long v : re) c.emplace_back(Ring::Gauss, v);
    return Poly(Ring::Gauss, std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and degree bookkeeping") {
    const Poly z = Poly::z(Ring::Gauss);
    const Poly p = z * z - Poly::constant(Ring::Gauss, 1);
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == Poly::kZeroDeg);
    CHECK(eval(p, FieldElement(Ring::Gauss, 3)) == FieldElement(Ring::Gauss, 8));
}

TEST_CASE("gcd examples") {
    const Poly z = Poly::z(Ring::Gauss);
    const Poly one = Poly::constant(Ring::Gauss, 1);
    CHECK(gcd(z * z - one, z - one) == z - one);
    CHECK(exact_div(z * z + FieldElement(Ring::Gauss, 2) * z + one, z + one) == z + one);
    CHECK_THROWS(exact_div(z * z + one, z - one));
}

TEST_CASE("eval of a printed coefficient row at zero") {
    // 1 + (2i-1) z evaluates to 1 at z = 0
    const Poly q(Ring::Gauss,
                 {field_one(Ring::Gauss), FieldElement(Ring::Gauss, -1, 2)});
    CHECK(eval(q, field_zero(Ring::Gauss)).is_one());
}

TEST_CASE("random gcd properties") {
    for (int k = 0; k < 60; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        std::uniform_int_distribution<long> d(0, 4);
        const Poly a = random_poly(r, 1 + d(rng));
        const Poly b = random_poly(r, 1 + d(rng));
        const Poly h = random_poly(r, d(rng));
        const Poly g = gcd(a * h, b * h);
        CHECK(g.is_monic());
        CHECK(divides(g, a * h));
        CHECK(divides(g, b * h));
        CHECK(divides(monic(h), g));
        CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("squarefree multiplicities") {
    const Poly z = Poly::z(Ring::Gauss);
    const Poly one = Poly::constant(Ring::Gauss, 1);
    {
        const auto f = squarefree_multiplicities(pow(z + one, 2));
        REQUIRE(f.size() == 1);
        CHECK(f[0].first == z + one);
        CHECK(f[0].second == 2);
    }
    {
        const auto f = squarefree_multiplicities(z * pow(z - one, 2));
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == z);
        CHECK(f[0].second == 1);
        CHECK(f[1].first == z - one);
        CHECK(f[1].second == 2);
    }
    {
        // numerator of 16 z (z-1)^2 / (z+1)^4
        const Poly num = Poly::constant(Ring::Gauss, 16) * z * pow(z - one, 2);
        const auto f = squarefree_multiplicities(num);
        REQUIRE(f.size() == 2);
        CHECK(f[0].first == z);
        CHECK(f[1].first == z - one);
        CHECK(f[1].second == 2);
    }
}

TEST_CASE("squarefree reconstruction and coprimality") {
    for (int k = 0; k < 40; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        std::uniform_int_distribution<long> d(1, 3);
        Poly p = Poly::constant(r, 1);
        p = p * pow(random_poly(r, d(rng)), 1);
        p = p * pow(random_poly(r, d(rng)), 2);
        const auto fs = squarefree_multiplicities(p);
        Poly rebuilt = Poly::constant(r, 1);
        for (const auto& [f, m] : fs) {
            rebuilt = rebuilt * pow(f, static_cast<unsigned long>(m));
            CHECK(f.is_monic());
        }
        CHECK(monic(rebuilt) == monic(p));
        for (size_t i = 0; i < fs.size(); ++i)
            for (size_t j = i + 1; j < fs.size(); ++j)
                CHECK(gcd(fs[i].first, fs[j].first).degree() == 0);
    }
}

TEST_CASE("compose respects eval") {
    for (int k = 0; k < 50; ++k) {
        const Ring r = Ring::Eisenstein;
        const Poly p = random_poly(r, 3), q = random_poly(r, 2);
        const FieldElement x = random_fe(r);
        CHECK(eval(compose(p, q), x) == eval(p, eval(q, x)));
    }
}

TEST_CASE("exact roots") {
    for (int k = 0; k < 25; ++k) {
        const Ring r = (k % 2 == 0) ? Ring::Gauss : Ring::Eisenstein;
        Poly p = random_poly(r, 3);
        // anchor the constant term at 1
        std::vector<FieldElement> c = p.coeffs();
        c[0] = field_one(r);
        p = Poly(r, std::move(c));
        CHECK(poly_sqrt(p * p, field_one(r)) == p);
        CHECK(poly_cbrt(p * p * p, field_one(r)) == p);
        CHECK(poly_sqrt(p * p, FieldElement(r, -1)) == -p);
    }
    CHECK_THROWS(poly_sqrt(gpoly({1, 1}), field_one(Ring::Gauss)));
    CHECK_THROWS(poly_sqrt(gpoly({1, 2, 1, 1}), field_one(Ring::Gauss)));
}

TEST_CASE("square part") {
    const Poly z = Poly::z(Ring::Gauss);
    const Poly one = Poly::constant(Ring::Gauss, 1);
    const Poly p = z * pow(z + one, 2) * pow(z - one, 5);
    CHECK(square_part(p) == (z + one) * pow(z - one, 2));
}

TEST_CASE("rational maps reduce and compare canonically") {
    const Ring r = Ring::Gauss;
    const Poly z = Poly::z(r), one = Poly::constant(r, 1);
    const RationalMap f((z + one) * z, (z + one) * (z - one));
    CHECK(f == RationalMap(z, z - one));
    CHECK(f.degree() == 1);
    const RationalMap g = f * inverse(f);
    CHECK(g == RationalMap::constant(field_one(r)));
    // degree of a composition multiplies
    const RationalMap h(z * z, one - z);
    CHECK(compose(h, f).degree() == h.degree() * f.degree());
}

TEST_CASE("compress_power extracts even structure") {
    const Ring r = Ring::Gauss;
    const Poly z = Poly::z(r), one = Poly::constant(r, 1);
    // (z^4 + 1) / z^2 = G(z^2) with G(s) = (s^2+1)/s
    const RationalMap f(pow(z, 4) + one, z * z);
    const RationalMap g = compress_power(f, 2);
    CHECK(g == RationalMap(pow(z, 2) + one, z));
    CHECK_THROWS(compress_power(RationalMap(z * z + z, one), 2));
}

TEST_CASE("limit at infinity") {
    const Ring r = Ring::Gauss;
    const Poly z = Poly::z(r), one = Poly::constant(r, 1);
    CHECK(limit_at_infinity(RationalMap(z, z * z + one)).is_zero());
    CHECK(limit_at_infinity(RationalMap(FieldElement(r, 3) * z, z + one)) ==
          FieldElement(r, 3));
    CHECK_THROWS(limit_at_infinity(RationalMap(z * z, z)));
}
