#include <doctest.h>

#include "hpgforge/monodromy.hpp"

using namespace hpgforge;

TEST_CASE("affine composition is associative and invertible") {
    const auto c = MonodromyCase::F3;
    const AffineMonodromy a = sigma0(c), b = sigma1(c), d = pochhammer(c);
    CHECK(compose_after(a, compose_after(b, d)) == compose_after(compose_after(a, b), d));
    CHECK(compose_after(a, monodromy_inverse(a)) == monodromy_identity(Ring::Eisenstein));
    CHECK(compose_after(monodromy_inverse(b), b) == monodromy_identity(Ring::Eisenstein));
    CHECK(monodromy_word(c, "") == monodromy_identity(Ring::Eisenstein));
}

TEST_CASE("the F4 words reproduce the period translations") {
    const Ring g = Ring::Gauss;
    // in F4 units shifts are half of the generic K-unit shifts
    const auto w1 = monodromy_word(MonodromyCase::F4, "001");
    CHECK(w1.scale == field_one(g));
    CHECK(w1.shift == FieldElement(g, 2));  // F4 + C4
    const auto w2 = monodromy_word(MonodromyCase::F4, "010");
    CHECK(w2.scale == field_one(g));
    CHECK(w2.shift == FieldElement(g, 0, 2));  // F4 + i C4
    // sigma1 is an involution here
    CHECK(monodromy_word(MonodromyCase::F4, "11") == monodromy_identity(g));
}

TEST_CASE("pochhammer shift equals (1-e^{2 pi i a})(1-e^{2 pi i b})") {
    for (MonodromyCase c : {MonodromyCase::F4, MonodromyCase::F6, MonodromyCase::F3}) {
        const AffineMonodromy p = pochhammer(c);
        const FieldElement one = field_one(p.scale.ring);
        CHECK(p.scale == one);
        const FieldElement ea = sigma0(c).scale, eb = sigma1(c).scale;
        CHECK(p.shift == (one - ea) * (one - eb));
    }
    // F4: (1-i)(1-(-1)) = 2 - 2i, i.e. (1-i) C4 in F4 units
    CHECK(pochhammer(MonodromyCase::F4).shift == FieldElement(Ring::Gauss, 2, -2));
}

TEST_CASE("period reports") {
    const Ring e = Ring::Eisenstein;
    const auto r6 = monodromy_group(MonodromyCase::F6);
    REQUIRE(r6.period_words.size() == 2);
    CHECK(r6.period_words[0].second == FieldElement(e, make_rat(2, 3), BigRat(0)));
    CHECK(r6.period_words[1].second == FieldElement(e, make_rat(2, 3), make_rat(2, 3)));
    // ratio of the pair is the sixth root of unity 1+w
    CHECK(r6.period_words[1].second / r6.period_words[0].second == FieldElement(e, 1, 1));

    const auto r3 = monodromy_group(MonodromyCase::F3);
    REQUIRE(r3.period_words.size() == 2);
    CHECK(r3.period_words[0].second == FieldElement(e, make_rat(1, 3), make_rat(2, 3)));
    CHECK(r3.period_words[1].second == FieldElement(e, make_rat(-1, 3), make_rat(1, 3)));
    CHECK(r3.period_words[1].second / r3.period_words[0].second == FieldElement(e, 1, 1));

    const auto r4 = monodromy_group(MonodromyCase::F4);
    CHECK(r4.period_words[0].second == field_one(Ring::Gauss));
    CHECK(r4.period_words[1].second == unit_i(Ring::Gauss));
}

TEST_CASE("non-translation words are rejected by the report") {
    // sigma0^{-1} sigma1 sigma0 is a conjugate of sigma1, never a translation
    const auto m = monodromy_word(MonodromyCase::F6, "O10");
    CHECK_FALSE(m.scale.is_one());
}
