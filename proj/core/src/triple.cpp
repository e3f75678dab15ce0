#include "hpgforge/triple.hpp"

#include <sstream>

namespace hpgforge {

Ring family_ring(Family f) { return f == Family::E1 ? Ring::Gauss : Ring::Eisenstein; }

std::ostream& operator<<(std::ostream& os, Family f) {
    switch (f) {
        case Family::E1: return os << "e1";
        case Family::E2: return os << "e2";
        case Family::E3: return os << "e3";
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, DegreeClass c) {
    switch (c) {
        case DegreeClass::C4N1: return os << "4n+1";
        case DegreeClass::C4N2: return os << "4n+2";
        case DegreeClass::C4N: return os << "4n";
        case DegreeClass::ODD1: return os << "6n+1";
        case DegreeClass::ODD3: return os << "6n+3";
        case DegreeClass::EVEN4: return os << "6n+4";
        case DegreeClass::EVEN0: return os << "6n";
        case DegreeClass::C3N1: return os << "3n+1";
        case DegreeClass::C3N: return os << "3n";
    }
    return os;
}

DegreeClass class_of(Family f, const BigInt& d) {
    if (d <= 0) throw std::domain_error("class_of: degree must be positive");
    const long r4 = to_long(d % 4), r6 = to_long(d % 6), r3 = to_long(d % 3);
    switch (f) {
        case Family::E1:
            if (r4 == 1) return DegreeClass::C4N1;
            if (r4 == 2) return DegreeClass::C4N2;
            if (r4 == 0) return DegreeClass::C4N;
            throw std::domain_error("class_of: no Gaussian norm is 3 mod 4");
        case Family::E2:
            if (r6 == 1) return DegreeClass::ODD1;
            if (r6 == 3) return DegreeClass::ODD3;
            if (r6 == 4) return DegreeClass::EVEN4;
            if (r6 == 0) return DegreeClass::EVEN0;
            throw std::domain_error("class_of: impossible Eisenstein norm class");
        case Family::E3:
            if (r3 == 1) return DegreeClass::C3N1;
            if (r3 == 0) return DegreeClass::C3N;
            throw std::domain_error("class_of: no Eisenstein norm is 2 mod 3");
    }
    throw std::logic_error("class_of: unreachable");
}

E3Form e3_form_of(const RingElement& u) {
    if (u.ring != Ring::Eisenstein) throw std::invalid_argument("e3_form_of: Eisenstein only");
    BigInt r = (u.a + u.b) % 3;
    if (r < 0) r += 3;
    if (r == 1) return E3Form::F1;
    if (r == 2) return E3Form::F2;
    return E3Form::F3;
}

DegreeTableRow expected_degrees(DegreeClass c, const BigInt& d) {
    const long dl = to_long(d);
    switch (c) {
        case DegreeClass::C4N1: { const long n = (dl - 1) / 4; return {n, n, 2 * n}; }
        case DegreeClass::C4N2: { const long n = (dl - 2) / 4; return {n, n, 2 * n + 1}; }
        case DegreeClass::C4N:  { const long n = dl / 4; return {n - 1, n, 2 * n}; }
        case DegreeClass::ODD1: { const long n = (dl - 1) / 6; return {n, 2 * n, 3 * n}; }
        case DegreeClass::ODD3: { const long n = (dl - 3) / 6; return {n, 2 * n + 1, 3 * n + 1}; }
        case DegreeClass::EVEN4:{ const long n = (dl - 4) / 6; return {n, 2 * n + 1, 3 * n + 2}; }
        case DegreeClass::EVEN0:{ const long n = dl / 6; return {n - 1, 2 * n, 3 * n}; }
        case DegreeClass::C3N1: { const long n = (dl - 1) / 3; return {n, n, n}; }
        case DegreeClass::C3N:  { const long n = dl / 3; return {n - 1, n, n}; }
    }
    throw std::logic_error("expected_degrees: unreachable");
}

namespace {

// Identity groups: which defining equation a representation satisfies.
enum class Kind { E1Odd, E1Even2, E1Even0, E2Odd, E2Even, E3a, E3b };

Kind kind_of(DegreeClass c) {
    switch (c) {
        case DegreeClass::C4N1: return Kind::E1Odd;
        case DegreeClass::C4N2: return Kind::E1Even2;
        case DegreeClass::C4N: return Kind::E1Even0;
        case DegreeClass::ODD1:
        case DegreeClass::ODD3: return Kind::E2Odd;
        case DegreeClass::EVEN4:
        case DegreeClass::EVEN0: return Kind::E2Even;
        case DegreeClass::C3N1: return Kind::E3a;
        case DegreeClass::C3N: return Kind::E3b;
    }
    throw std::logic_error("kind_of: unreachable");
}

Poly zpoly(Ring r) { return Poly::z(r); }
Poly omz(Ring r) { return Poly::one_minus_z(r); }

}  // namespace

bool identity_holds(const Triple& t) {
    const Ring r = family_ring(t.family);
    const Poly z = zpoly(r), c = omz(r);
    const Poly &P = t.P, &Q = t.Q, &R = t.R;
    switch (kind_of(t.cls)) {
        case Kind::E1Odd:
            return c * pow(R, 2) == pow(Q, 4) - z * pow(P, 4);
        case Kind::E1Even2:
            return pow(R, 2) == pow(c, 2) * pow(Q, 4) - z * pow(P, 4);
        case Kind::E1Even0:
            return pow(R, 2) == pow(Q, 4) - z * pow(c, 2) * pow(P, 4);
        case Kind::E2Odd:
            return c * pow(R, 2) == pow(Q, 3) - z * pow(P, 6);
        case Kind::E2Even:
            return pow(R, 2) == pow(Q, 3) - z * pow(c, 3) * pow(P, 6);
        case Kind::E3a:
            return z * pow(P, 3) + c * pow(R, 3) == pow(Q, 3);
        case Kind::E3b:
            return z * (z - Poly::constant(r, 1)) * pow(P, 3) == pow(Q, 3) + pow(R, 3);
    }
    return false;
}

bool verify_triple(const Triple& t) {
    if (t.u.is_zero()) return false;
    const BigInt d = norm(t.u);
    DegreeClass expect;
    try {
        expect = class_of(t.family, d);
    } catch (const std::exception&) {
        return false;
    }
    if (t.cls != expect) return false;
    const DegreeTableRow deg = expected_degrees(t.cls, d);
    if (t.P.degree() != deg.p || t.Q.degree() != deg.q || t.R.degree() != deg.r) return false;
    if (!identity_holds(t)) return false;
    const Ring r = family_ring(t.family);
    const FieldElement one = field_one(r);
    if (!(t.Q.at_zero() == one)) return false;
    if (t.family != Family::E3) {
        if (!(t.P.at_zero() == FieldElement(t.u))) return false;
        if (!(t.R.at_zero() == one)) return false;
    } else {
        if (t.form != e3_form_of(t.u)) return false;
        if (t.form == E3Form::F1 && !(t.P.at_zero() == FieldElement(t.u))) return false;
        if (t.form != E3Form::F1 && !(t.P.at_zero() == FieldElement(-t.u))) return false;
        const FieldElement want_r0 =
            (t.cls == DegreeClass::C3N1) ? one : FieldElement(r, -1);
        if (!(t.R.at_zero() == want_r0)) return false;
    }
    return true;
}

Triple unit_triple(Family f, const RingElement& eps) {
    if (!eps.is_unit()) throw std::invalid_argument("unit_triple: not a unit");
    const Ring r = family_ring(f);
    if (f == Family::E3) {
        const E3Form form = e3_form_of(eps);
        // F1 units: (eps, 1, 1); F2 units: (-eps, 1, 1) so that P(0) = -u.
        const RingElement p0 = (form == E3Form::F1) ? eps : -eps;
        return Triple{f, eps, DegreeClass::C3N1, form,
                      Poly::constant(FieldElement(p0)), Poly::constant(r, 1),
                      Poly::constant(r, 1)};
    }
    const DegreeClass c = (f == Family::E1) ? DegreeClass::C4N1 : DegreeClass::ODD1;
    return Triple{f, eps, c, E3Form::None, Poly::constant(FieldElement(eps)),
                  Poly::constant(r, 1), Poly::constant(r, 1)};
}

// ---------------------------------------------------------------------
// E1/E2 pipeline
// ---------------------------------------------------------------------

namespace {

Triple decorate_to_c4n2(const Triple& t) {
    const Poly c = omz(Ring::Gauss);
    return Triple{t.family, t.u, DegreeClass::C4N2, E3Form::None, c * t.P, t.Q, c * t.R};
}

Triple decorate_to_odd(const Triple& t) {
    const Poly c = omz(Ring::Eisenstein);
    return Triple{t.family, t.u, DegreeClass::ODD1, E3Form::None, c * t.P, c * t.Q, c * t.R};
}

Poly sqrt_R_for_class(DegreeClass cls, const Poly& P, const Poly& Q) {
    const Ring r = P.ring();
    const Poly z = zpoly(r), c = omz(r);
    Poly S(r);
    switch (kind_of(cls)) {
        case Kind::E1Odd: S = exact_div(pow(Q, 4) - z * pow(P, 4), c); break;
        case Kind::E1Even2: S = pow(c, 2) * pow(Q, 4) - z * pow(P, 4); break;
        case Kind::E1Even0: S = pow(Q, 4) - z * pow(c, 2) * pow(P, 4); break;
        case Kind::E2Odd: S = exact_div(pow(Q, 3) - z * pow(P, 6), c); break;
        case Kind::E2Even: S = pow(Q, 3) - z * pow(c, 3) * pow(P, 6); break;
        default: throw std::logic_error("sqrt_R_for_class: E3 uses the cube-root path");
    }
    return poly_sqrt(S, field_one(r));
}

Poly cbrt_R_for_class(DegreeClass cls, const Poly& P, const Poly& Q) {
    const Ring r = P.ring();
    const Poly z = zpoly(r), c = omz(r);
    if (cls == DegreeClass::C3N1)
        return poly_cbrt(exact_div(pow(Q, 3) - z * pow(P, 3), c), field_one(r));
    return poly_cbrt(z * (z - Poly::constant(r, 1)) * pow(P, 3) - pow(Q, 3),
                     FieldElement(r, -1));
}

enum class Rep { E1OddRep, E1Even2Rep, E1Even0Rep, E2OddRep, E2EvenRep };

Triple finish_e1(const RingElement& u, Poly Praw, Poly Qraw, Rep rep) {
    if (Praw.is_zero() || Qraw.is_zero())
        throw std::logic_error("triple addition degenerated to a zero component");
    Poly g = gcd(Praw, Qraw);
    Poly P = exact_div(Praw, g), Q = exact_div(Qraw, g);
    const DegreeClass cls = class_of(Family::E1, norm(u));
    const Poly c = omz(Ring::Gauss);
    if (rep == Rep::E1Even2Rep && cls == DegreeClass::C4N) {
        P = exact_div(P, c);
    } else if (rep == Rep::E1Even0Rep && cls == DegreeClass::C4N2) {
        Q = exact_div(Q, c);
    } else if (rep == Rep::E1OddRep && cls != DegreeClass::C4N1) {
        throw std::logic_error("odd representation with even covering degree");
    }
    const FieldElement scale_c = P.at_zero() / FieldElement(u);
    if (scale_c.is_zero()) throw std::logic_error("triple normalization hit P(0) = 0");
    P = scale(P, scale_c);
    Q = scale(Q, scale_c);
    if (!(Q.at_zero() == field_one(Ring::Gauss)))
        throw std::logic_error("triple normalization failed: Q(0) != 1");
    Poly R = sqrt_R_for_class(cls, P, Q);
    return Triple{Family::E1, u, cls, E3Form::None, P, Q, R};
}

Triple finish_e2(const RingElement& u, Poly Praw, Poly Qraw, Rep rep) {
    if (Praw.is_zero() || Qraw.is_zero())
        throw std::logic_error("triple addition degenerated to a zero component");
    // projective reduction (P/h, Q/h^2, R/h^3): the largest monic h with
    // h | P and h^2 | Q is gcd(P, square_part(Q)).
    Poly h = gcd(Praw, square_part(Qraw));
    Poly P = exact_div(Praw, h), Q = exact_div(Qraw, h * h);
    const DegreeClass cls = class_of(Family::E2, norm(u));
    const Kind k = kind_of(cls);
    const Poly c = omz(Ring::Eisenstein);
    if (rep == Rep::E2OddRep && k == Kind::E2Even) {
        P = exact_div(P, c);
        Q = exact_div(Q, c);
    } else if (rep == Rep::E2EvenRep && k == Kind::E2Odd) {
        throw std::logic_error("even representation with odd covering degree");
    }
    const FieldElement scale_c = P.at_zero() / FieldElement(u);
    if (scale_c.is_zero()) throw std::logic_error("triple normalization hit P(0) = 0");
    P = scale(P, scale_c);
    Q = scale(Q, scale_c * scale_c);
    if (!(Q.at_zero() == field_one(Ring::Eisenstein)))
        throw std::logic_error("triple normalization failed: Q(0) != 1");
    Poly R = sqrt_R_for_class(cls, P, Q);
    return Triple{Family::E2, u, cls, E3Form::None, P, Q, R};
}

bool is_even_kind(const Triple& t) {
    const Kind k = kind_of(t.cls);
    return k == Kind::E1Even2 || k == Kind::E1Even0 || k == Kind::E2Even;
}

Triple add_e1(const Triple& a0, const Triple& b0) {
    const RingElement u = a0.u + b0.u;
    Triple a = (kind_of(a0.cls) == Kind::E1Even0) ? decorate_to_c4n2(a0) : a0;
    Triple b = (kind_of(b0.cls) == Kind::E1Even0) ? decorate_to_c4n2(b0) : b0;
    const bool ea = is_even_kind(a), eb = is_even_kind(b);
    const Poly c = omz(Ring::Gauss);
    if (!ea && !eb) {
        Poly Praw = pow(a.P, 2) * pow(b.Q, 2) - pow(b.P, 2) * pow(a.Q, 2);
        Poly Qraw = a.P * a.Q * b.R - b.P * b.Q * a.R;
        return finish_e1(u, Praw, Qraw, Rep::E1Even2Rep);
    }
    if (ea && eb) {
        Poly Praw = pow(a.P, 2) * pow(b.Q, 2) - pow(b.P, 2) * pow(a.Q, 2);
        Poly Qraw = a.P * a.Q * b.R - b.P * b.Q * a.R;
        return finish_e1(u, Praw, Qraw, Rep::E1Even0Rep);
    }
    const Triple& e = ea ? a : b;
    const Triple& o = ea ? b : a;
    Poly Praw = c * pow(e.Q, 2) * pow(o.P, 2) - pow(o.Q, 2) * pow(e.P, 2);
    Poly Qraw = o.P * o.Q * e.R - c * e.P * e.Q * o.R;
    return finish_e1(u, Praw, Qraw, Rep::E1OddRep);
}

Triple add_e2(const Triple& a0, const Triple& b0) {
    const RingElement u = a0.u + b0.u;
    Triple a = is_even_kind(a0) ? decorate_to_odd(a0) : a0;
    Triple b = is_even_kind(b0) ? decorate_to_odd(b0) : b0;
    const Poly c = omz(Ring::Eisenstein);
    const Poly z = zpoly(Ring::Eisenstein);
    const Poly two = Poly::constant(Ring::Eisenstein, 2);
    Poly Praw = pow(a.P, 2) * b.Q - pow(b.P, 2) * a.Q;
    Poly Qraw = a.Q * b.Q * (pow(a.P, 2) * b.Q + pow(b.P, 2) * a.Q) -
                two * c * a.P * b.P * a.R * b.R - two * z * pow(a.P, 4) * pow(b.P, 4);
    return finish_e2(u, Praw, Qraw, Rep::E2OddRep);
}

// ---------------------------------------------------------------------
// E3: bigraded function-field terms X^a Y^b f(s) with X^3 = 1/s,
// Y^3 = (s-1)/s.
// ---------------------------------------------------------------------

struct E3Term {
    int xd = 0, yd = 0;
    RationalMap f{Ring::Eisenstein};

    bool is_zero() const { return f.is_zero(); }
};

RationalMap e3_s() { return RationalMap::z(Ring::Eisenstein); }

RationalMap e3_s_minus_1() {
    return RationalMap(Poly(Ring::Eisenstein,
                            {FieldElement(Ring::Eisenstein, -1), field_one(Ring::Eisenstein)}));
}

E3Term canonicalize(E3Term t) {
    if (t.is_zero()) {
        t.xd = t.yd = 0;
        return t;
    }
    while (t.xd >= 3) { t.xd -= 3; t.f = t.f / e3_s(); }
    while (t.xd < 0) { t.xd += 3; t.f = t.f * e3_s(); }
    while (t.yd >= 3) { t.yd -= 3; t.f = t.f * e3_s_minus_1() / e3_s(); }
    while (t.yd < 0) { t.yd += 3; t.f = t.f * e3_s() / e3_s_minus_1(); }
    return t;
}

E3Term operator*(const E3Term& a, const E3Term& b) {
    return canonicalize({a.xd + b.xd, a.yd + b.yd, a.f * b.f});
}

E3Term scalar_mul(const E3Term& a, const RationalMap& s) {
    return {a.xd, a.yd, a.f * s};
}

E3Term operator/(const E3Term& a, const E3Term& b) {
    if (b.is_zero()) throw std::domain_error("E3 term division by zero");
    return canonicalize({a.xd - b.xd, a.yd - b.yd, a.f / b.f});
}

E3Term operator-(const E3Term& a, const E3Term& b) {
    if (a.is_zero()) return canonicalize({b.xd, b.yd, -b.f});
    if (b.is_zero()) return a;
    if (a.xd != b.xd || a.yd != b.yd)
        throw std::logic_error("E3 term subtraction across different bidegrees");
    return {a.xd, a.yd, a.f - b.f};
}

struct E3Pair {
    E3Term x, y;
};

E3Pair to_terms(const Triple& t) {
    const RationalMap QP = RationalMap(t.Q, t.P);
    const RationalMap RP = RationalMap(t.R, t.P);
    switch (t.form) {
        case E3Form::F1: return {{1, 0, QP}, {0, 1, RP}};
        case E3Form::F2: return {{0, 1, RP}, {1, 0, QP}};
        case E3Form::F3: {
            const RationalMap pre = e3_s() / e3_s_minus_1();
            return {{2, 2, pre * QP}, {2, 2, pre * RP}};
        }
        default: throw std::logic_error("to_terms: triple has no E3 form");
    }
}

Triple e3_extract(const E3Pair& w, const RingElement& u) {
    const E3Form form = e3_form_of(u);
    const E3Term& fx = w.x;
    const E3Term& fy = w.y;
    RationalMap slot(Ring::Eisenstein);
    if (fx.xd == 1 && fx.yd == 0) {
        if (form != E3Form::F1 || fy.xd != 0 || fy.yd != 1)
            throw std::logic_error("e3_extract: bidegree/form mismatch (F1)");
        slot = fx.f;
    } else if (fx.xd == 0 && fx.yd == 1) {
        if (form != E3Form::F2 || fy.xd != 1 || fy.yd != 0)
            throw std::logic_error("e3_extract: bidegree/form mismatch (F2)");
        slot = fy.f;
    } else if (fx.xd == 2 && fx.yd == 2) {
        if (form != E3Form::F3 || fy.xd != 2 || fy.yd != 2)
            throw std::logic_error("e3_extract: bidegree/form mismatch (F3)");
        slot = fx.f * e3_s_minus_1() / e3_s();
    } else {
        throw std::logic_error("e3_extract: unrecognized bidegree pattern");
    }
    Poly Q = slot.num(), P = slot.den();
    const FieldElement q0 = Q.at_zero();
    if (q0.is_zero()) throw std::logic_error("e3_extract: Q(0) = 0");
    P = scale(P, q0);
    Q = scale(Q, q0);
    const DegreeClass cls = class_of(Family::E3, norm(u));
    const FieldElement fu(u);
    if (form == E3Form::F1 && !(P.at_zero() == fu))
        throw std::logic_error("e3_extract: F1 anchor P(0) != u");
    if ((form == E3Form::F2 || form == E3Form::F3) && !(P.at_zero() == -fu))
        throw std::logic_error("e3_extract: anchor P(0) != -u");
    Poly R = cbrt_R_for_class(cls, P, Q);
    return Triple{Family::E3, u, cls, form, P, Q, R};
}

Triple e3_dup(const Triple& t);

Triple e3_add(const Triple& t1, const Triple& t2) {
    const RingElement u = t1.u + t2.u;
    if (u.is_zero()) throw std::domain_error("add_triples: u1 + u2 = 0 is degenerate");
    if (t1.u == t2.u) return e3_dup(t1);
    const E3Pair a = to_terms(t1), b = to_terms(t2);
    const E3Term den = (a.x * a.y) - (b.x * b.y);
    if (den.is_zero()) throw std::logic_error("e3_add: degenerate chord");
    const E3Term nx = (a.x * b.y * b.y) - (b.x * a.y * a.y);
    const E3Term ny = (b.x * b.x * a.y) - (a.x * a.x * b.y);
    return e3_extract({nx / den, ny / den}, u);
}

Triple e3_dup(const Triple& t) {
    const RingElement u2 = t.u + t.u;
    const E3Pair a = to_terms(t);
    const E3Term cube = a.y * a.y * a.y;
    if (cube.xd != 0 || cube.yd != 0) throw std::logic_error("e3_dup: psi^3 not a scalar");
    const RationalMap tau = cube.f;
    const RationalMap one = RationalMap::constant(field_one(Ring::Eisenstein));
    const RationalMap two = RationalMap::constant(FieldElement(Ring::Eisenstein, 2));
    const RationalMap dn = two * tau - one;
    if (dn.is_zero()) throw std::logic_error("e3_dup: tangent denominator vanished");
    E3Term x2 = scalar_mul(a.y, (two - tau) / dn);
    E3Term y2 = scalar_mul(a.x, -(one + tau) / dn);
    return e3_extract({canonicalize(x2), canonicalize(y2)}, u2);
}

Triple e3_unit(const Triple& t, const RingElement& eps) {
    // post-compose the coordinate automorphism of the unit eps
    E3Pair p = to_terms(t);
    RingElement e = eps;
    const Ring r = Ring::Eisenstein;
    const RingElement minus_one(r, -1, 0), omega(r, 0, 1);
    // factor eps = (-1)^s * omega^k
    int s = 0;
    if (e == minus_one || e == -omega || e == RingElement(r, 1, 1)) {
        // -1, -w, -w^2 = 1+w
        s = 1;
        e = -e;
    }
    int k = 0;
    if (e == omega) k = 1;
    else if (e == RingElement(r, -1, -1)) k = 2;  // w^2
    else if (!(e == RingElement(r, 1, 0)))
        throw std::invalid_argument("e3_unit: not a unit");
    const FieldElement w2 = FieldElement(r, -1, -1);  // omega^-1 = omega^2
    for (int j = 0; j < k; ++j) {
        p.x = scalar_mul(p.x, RationalMap::constant(w2));
        p.y = scalar_mul(p.y, RationalMap::constant(w2));
    }
    if (s) std::swap(p.x, p.y);
    return e3_extract(p, eps * t.u);
}

}  // namespace

Triple add_triples(const Triple& t1, const Triple& t2) {
    if (t1.family != t2.family) throw std::invalid_argument("add_triples: family mismatch");
    const RingElement u = t1.u + t2.u;
    if (u.is_zero()) throw std::domain_error("add_triples: u1 + u2 = 0 is degenerate");
    if (t1.u == t2.u) return duplicate(t1);
    switch (t1.family) {
        case Family::E1: return add_e1(t1, t2);
        case Family::E2: return add_e2(t1, t2);
        case Family::E3: return e3_add(t1, t2);
    }
    throw std::logic_error("add_triples: unreachable");
}

Triple unit_action(const Triple& t, const RingElement& eps) {
    if (!eps.is_unit()) throw std::invalid_argument("unit_action: argument is not a unit");
    if (t.family == Family::E3) return e3_unit(t, eps);
    return Triple{t.family, eps * t.u, t.cls, E3Form::None,
                  FieldElement(eps) * t.P, t.Q, t.R};
}

Triple duplicate(const Triple& t) {
    const RingElement u2 = t.u + t.u;
    switch (t.family) {
        case Family::E1: {
            const Kind k = kind_of(t.cls);
            if (k == Kind::E1Even0) return duplicate(decorate_to_c4n2(t));
            const Poly z = zpoly(Ring::Gauss), c = omz(Ring::Gauss);
            const Poly two = Poly::constant(Ring::Gauss, 2);
            Poly Praw = two * t.P * t.Q * t.R;
            Poly Qraw = (k == Kind::E1Odd)
                            ? pow(t.Q, 4) + z * pow(t.P, 4)
                            : pow(c, 2) * pow(t.Q, 4) + z * pow(t.P, 4);
            return finish_e1(u2, Praw, Qraw, Rep::E1Even0Rep);
        }
        case Family::E2: {
            if (kind_of(t.cls) == Kind::E2Even) return duplicate(decorate_to_odd(t));
            const Poly z = zpoly(Ring::Eisenstein);
            const Poly two = Poly::constant(Ring::Eisenstein, 2);
            const Poly eight = Poly::constant(Ring::Eisenstein, 8);
            Poly Praw = two * t.P * t.R;
            Poly Qraw = t.Q * (pow(t.Q, 3) + eight * z * pow(t.P, 6));
            return finish_e2(u2, Praw, Qraw, Rep::E2EvenRep);
        }
        case Family::E3: return e3_dup(t);
    }
    throw std::logic_error("duplicate: unreachable");
}

Triple mul_one_minus_omega(const Triple& t) {
    if (t.family != Family::E2)
        throw std::invalid_argument("mul_one_minus_omega: E2 family only");
    Triple a = is_even_kind(t) ? decorate_to_odd(t) : t;
    const RingElement one_minus_w(Ring::Eisenstein, 1, -1);
    const RingElement u = one_minus_w * t.u;
    const Poly z = zpoly(Ring::Eisenstein);
    const Poly four = Poly::constant(Ring::Eisenstein, 4);
    Poly Praw = Poly::constant(FieldElement(one_minus_w)) * a.P * a.Q;
    Poly Qraw = pow(a.Q, 3) - four * z * pow(a.P, 6);
    return finish_e2(u, Praw, Qraw, Rep::E2OddRep);
}

Triple class_convert(const Triple& t, DegreeClass target) {
    const Ring r = family_ring(t.family);
    const Poly c = omz(r);
    if (t.family == Family::E1) {
        if (t.cls == DegreeClass::C4N && target == DegreeClass::C4N2)
            return Triple{t.family, t.u, target, E3Form::None, c * t.P, t.Q, c * t.R};
        if (t.cls == DegreeClass::C4N2 && target == DegreeClass::C4N)
            return Triple{t.family, t.u, target, E3Form::None, exact_div(t.P, c), t.Q,
                          exact_div(t.R, c)};
    } else if (t.family == Family::E2) {
        const Kind k = kind_of(t.cls), kt = kind_of(target);
        if (k == Kind::E2Even && kt == Kind::E2Odd)
            return Triple{t.family, t.u, target, E3Form::None, c * t.P, c * t.Q, c * t.R};
        if (k == Kind::E2Odd && kt == Kind::E2Even)
            return Triple{t.family, t.u, target, E3Form::None, exact_div(t.P, c),
                          exact_div(t.Q, c), exact_div(t.R, c)};
    }
    throw std::invalid_argument("class_convert: unsupported conversion");
}

// ---------------------------------------------------------------------
// Lattice walks
// ---------------------------------------------------------------------

namespace {

// 2*Re(u * conj(eps)) -- the norm decrease of the step u -> u - eps is
// this quantity minus one.
BigInt two_re_times(const RingElement& u, const RingElement& eps) {
    const RingElement p = u * conj(eps);
    if (u.ring == Ring::Gauss) return 2 * p.a;
    return 2 * p.a - p.b;
}

RingElement best_unit_step(const RingElement& u) {
    const auto us = units(u.ring);
    const RingElement* best = &us[0];
    BigInt val = two_re_times(u, us[0]);
    for (const auto& e : us) {
        BigInt v = two_re_times(u, e);
        if (v > val) {
            val = v;
            best = &e;
        }
    }
    if (val < 2) throw std::logic_error("lattice walk: no descending unit step");
    return *best;
}

Triple walk(Family f, const RingElement& u, TripleCache& memo_holder) {
    auto& memo = memo_holder.memo;
    const auto key = std::make_tuple(static_cast<int>(f), to_long(u.a), to_long(u.b));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Triple out = unit_triple(f, RingElement(u.ring, 1, 0));
    if (u.is_unit()) {
        out = unit_triple(f, u);
    } else {
        const RingElement eps = best_unit_step(u);
        const RingElement w = u - eps;
        if (w == eps) {
            out = duplicate(unit_triple(f, eps));
        } else {
            Triple tw = walk(f, w, memo_holder);
            out = add_triples(tw, unit_triple(f, eps));
        }
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace

Triple generate(Family f, const RingElement& u, TripleCache& cache) {
    if (u.is_zero()) throw std::domain_error("generate: u = 0");
    if (u.ring != family_ring(f)) throw std::invalid_argument("generate: wrong ring for family");
    return walk(f, canonical_rep(u), cache);
}

Triple generate(Family f, const RingElement& u) {
    TripleCache cache;
    return generate(f, u, cache);
}

Triple e3_generate(const RingElement& u) { return generate(Family::E3, u); }

Triple triple_for_element(Family f, const RingElement& u) {
    const Triple t = generate(f, u);
    if (t.u == u) return t;
    const RingElement eps = exact_div(u, t.u);
    if (!eps.is_unit()) throw std::logic_error("triple_for_element: non-unit associate ratio");
    return unit_action(t, eps);
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
    os << t.family << " triple u=" << t.u << " class " << t.cls << "\n";
    os << "  P = " << t.P << "\n  Q = " << t.Q << "\n  R = " << t.R;
    return os;
}

}  // namespace hpgforge
