#include "hpgforge/monodromy.hpp"

namespace hpgforge {

AffineMonodromy compose_after(const AffineMonodromy& second, const AffineMonodromy& first) {
    // second(first(F)) = s_f * second(F) + c_f*K = s_s s_f F + (s_f c_s + c_f) K
    return {second.scale * first.scale, first.scale * second.shift + first.shift};
}

AffineMonodromy monodromy_identity(Ring r) { return {field_one(r), field_zero(r)}; }

AffineMonodromy monodromy_inverse(const AffineMonodromy& m) {
    // need t with compose_after(t, m) = id: s_t = 1/s_m, c_t = -c_m / s_m
    const FieldElement si = inverse(m.scale);
    return {si, -(m.shift * si)};
}

namespace {

Ring case_ring(MonodromyCase c) { return c == MonodromyCase::F4 ? Ring::Gauss : Ring::Eisenstein; }

// e^{2 pi i q} for the q arising in the three cases, as an exact unit.
FieldElement root_of_unity(Ring r, const BigRat& q) {
    if (q == make_rat(1, 4)) return unit_i(r);                       // i
    if (q == make_rat(1, 2)) return FieldElement(r, -1);             // -1
    if (q == make_rat(1, 6)) return FieldElement(r, 1, 1);           // 1+w = zeta_6
    if (q == make_rat(1, 3)) return unit_omega(r);                   // w
    throw std::invalid_argument("root_of_unity: unsupported exponent");
}

BigRat case_a(MonodromyCase c) {
    switch (c) {
        case MonodromyCase::F4: return make_rat(1, 4);
        case MonodromyCase::F6: return make_rat(1, 6);
        case MonodromyCase::F3: return make_rat(1, 3);
    }
    throw std::logic_error("case_a: unreachable");
}

BigRat case_b(MonodromyCase c) {
    return c == MonodromyCase::F3 ? make_rat(1, 3) : make_rat(1, 2);
}

}  // namespace

AffineMonodromy sigma0(MonodromyCase c) {
    const Ring r = case_ring(c);
    return {root_of_unity(r, case_a(c)), field_zero(r)};
}

AffineMonodromy sigma1(MonodromyCase c) {
    const Ring r = case_ring(c);
    const FieldElement e = root_of_unity(r, case_b(c));
    return {e, field_one(r) - e};
}

AffineMonodromy monodromy_word(MonodromyCase c, const std::string& word) {
    const Ring r = case_ring(c);
    AffineMonodromy cur = monodromy_identity(r);
    // rightmost letter acts first
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        AffineMonodromy g = monodromy_identity(r);
        switch (*it) {
            case '0': g = sigma0(c); break;
            case '1': g = sigma1(c); break;
            case 'O': g = monodromy_inverse(sigma0(c)); break;
            case 'I': g = monodromy_inverse(sigma1(c)); break;
            default: throw std::invalid_argument("monodromy_word: bad letter");
        }
        cur = compose_after(g, cur);
    }
    return cur;
}

AffineMonodromy pochhammer(MonodromyCase c) { return monodromy_word(c, "OI01"); }

MonodromyReport monodromy_group(MonodromyCase c) {
    MonodromyReport rep;
    rep.which = c;
    rep.s0 = sigma0(c);
    rep.s1 = sigma1(c);
    const Ring r = case_ring(c);
    // integral normalization: I = F/2 (F4, where I = F_4), I = F/3 (F6, F3)
    const FieldElement unit_scale = (c == MonodromyCase::F4)
                                        ? inverse(FieldElement(r, 2))
                                        : inverse(FieldElement(r, 3));
    std::vector<std::string> words;
    switch (c) {
        case MonodromyCase::F4: words = {"001", "010"}; break;
        case MonodromyCase::F6: words = {"0001", "0010"}; break;
        case MonodromyCase::F3: words = {"010", "110"}; break;
    }
    for (const auto& w : words) {
        const AffineMonodromy m = monodromy_word(c, w);
        if (!m.scale.is_one())
            throw std::logic_error("monodromy_group: period word is not a translation");
        rep.period_words.emplace_back(w, m.shift * unit_scale);
    }
    return rep;
}

std::string monodromy_constant_description(MonodromyCase c) {
    switch (c) {
        case MonodromyCase::F4: return "K = Gamma(1/4)^2/sqrt(2*pi)";
        case MonodromyCase::F6: return "K = 3*Gamma(1/3)^3/(2^(4/3)*pi)";
        case MonodromyCase::F3: return "K = sqrt(3)*Gamma(1/3)^3/(2*pi)";
    }
    throw std::logic_error("monodromy_constant_description: unreachable");
}

}  // namespace hpgforge
