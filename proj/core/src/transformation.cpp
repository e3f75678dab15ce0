#include "hpgforge/transformation.hpp"

namespace hpgforge {

std::ostream& operator<<(std::ostream& os, FuncSide s) {
    switch (s) {
        case FuncSide::F144: return os << "(1/2,1/4,1/4)";
        case FuncSide::F126: return os << "(1/2,1/3,1/6)";
        case FuncSide::F333: return os << "(1/3,1/3,1/3)";
        case FuncSide::FHyp: return os << "(2/3,1/6,1/6)";
    }
    return os;
}

HpgParams side_params(FuncSide s) {
    switch (s) {
        case FuncSide::F144: return {make_rat(1, 2), make_rat(1, 4), make_rat(5, 4)};
        case FuncSide::F126: return {make_rat(1, 2), make_rat(1, 6), make_rat(7, 6)};
        case FuncSide::F333: return {make_rat(1, 3), make_rat(2, 3), make_rat(4, 3)};
        case FuncSide::FHyp: return {make_rat(1, 3), make_rat(1, 6), make_rat(7, 6)};
    }
    throw std::logic_error("side_params: unreachable");
}

ExpTriple side_exponents(FuncSide s) {
    // |1-c|, |c-a-b|, |a-b| at z = 0, 1, infinity.
    switch (s) {
        case FuncSide::F144: return {make_rat(1, 4), make_rat(1, 2), make_rat(1, 4)};
        case FuncSide::F126: return {make_rat(1, 6), make_rat(1, 2), make_rat(1, 3)};
        case FuncSide::F333: return {make_rat(1, 3), make_rat(1, 3), make_rat(1, 3)};
        case FuncSide::FHyp: return {make_rat(1, 6), make_rat(2, 3), make_rat(1, 6)};
    }
    throw std::logic_error("side_exponents: unreachable");
}

FuncSide family_side(Family f) {
    switch (f) {
        case Family::E1: return FuncSide::F144;
        case Family::E2: return FuncSide::F126;
        case Family::E3: return FuncSide::F333;
    }
    throw std::logic_error("family_side: unreachable");
}

RadicalFactor radical_one(Ring r) {
    (void)r;
    return RadicalFactor{};
}

static void check_normalized(const RadicalTerm& t) {
    const FieldElement v = eval(t.base, field_zero(t.base.ring()));
    if (!v.is_one())
        throw std::invalid_argument("radical term base must satisfy base(0) = 1");
}

static RadicalFactor make_radical(std::vector<RadicalTerm> terms) {
    RadicalFactor f;
    for (auto& t : terms) {
        if (t.exp == 0 || t.base.is_constant()) continue;
        check_normalized(t);
        f.terms.push_back(std::move(t));
    }
    return f;
}

RadicalFactor radical_mul(const RadicalFactor& a, const RadicalFactor& b) {
    std::vector<RadicalTerm> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return make_radical(std::move(terms));
}

static RationalMap radical_int_power(const RadicalFactor& f, const BigInt& N) {
    if (f.terms.empty())
        throw std::invalid_argument("radical_int_power: empty factor has any ring");
    RationalMap acc = RationalMap::constant(field_one(f.terms[0].base.ring()));
    for (const auto& t : f.terms) {
        BigRat e = t.exp * BigRat(N);
        if (!is_integer(e)) throw std::logic_error("radical_int_power: non-integer power");
        acc = acc * pow(t.base, to_long(BigInt(e.get_num())));
    }
    return acc;
}

bool radical_equal(const RadicalFactor& a, const RadicalFactor& b) {
    if (a.terms.empty() && b.terms.empty()) return true;
    BigInt N = 1;
    for (const auto& t : a.terms) N = N / gcd(N, BigInt(t.exp.get_den())) * BigInt(t.exp.get_den());
    for (const auto& t : b.terms) N = N / gcd(N, BigInt(t.exp.get_den())) * BigInt(t.exp.get_den());
    if (a.terms.empty()) return radical_int_power(b, N).is_constant() &&
                                radical_int_power(b, N).num().is_one();
    if (b.terms.empty()) return radical_int_power(a, N).is_constant() &&
                                radical_int_power(a, N).num().is_one();
    return radical_int_power(a, N) == radical_int_power(b, N);
}

Transformation to_transformation(const Triple& t) {
    if (!verify_triple(t)) throw std::invalid_argument("to_transformation: invalid triple");
    const Ring r = family_ring(t.family);
    const Poly z = Poly::z(r), c = Poly::one_minus_z(r);
    const FieldElement fu(t.u);
    const FuncSide side = family_side(t.family);
    Transformation out;
    out.source = side;
    out.target = side;
    out.u = t.u;
    std::vector<RadicalTerm> terms;
    const RationalMap omz(c);
    switch (t.cls) {
        case DegreeClass::C4N1:
            out.phi = RationalMap(z * pow(t.P, 4), pow(t.Q, 4));
            terms.push_back({RationalMap(t.P, fu * t.Q), BigRat(1)});
            break;
        case DegreeClass::C4N2:
            out.phi = RationalMap(z * pow(t.P, 4), pow(c, 2) * pow(t.Q, 4));
            terms.push_back({RationalMap(t.P, fu * t.Q), BigRat(1)});
            terms.push_back({omz, make_rat(-1, 2)});
            break;
        case DegreeClass::C4N:
            out.phi = RationalMap(z * pow(c, 2) * pow(t.P, 4), pow(t.Q, 4));
            terms.push_back({RationalMap(t.P, fu * t.Q), BigRat(1)});
            terms.push_back({omz, make_rat(1, 2)});
            break;
        case DegreeClass::ODD1:
        case DegreeClass::ODD3:
            // (u^2 Q / P^2)^(-1/2) split as (P/u) Q^(-1/2), all pieces 1 at z=0
            out.phi = RationalMap(z * pow(t.P, 6), pow(t.Q, 3));
            terms.push_back({RationalMap(t.P, Poly::constant(fu)), BigRat(1)});
            terms.push_back({RationalMap(t.Q), make_rat(-1, 2)});
            break;
        case DegreeClass::EVEN4:
        case DegreeClass::EVEN0:
            out.phi = RationalMap(z * pow(c, 3) * pow(t.P, 6), pow(t.Q, 3));
            terms.push_back({RationalMap(t.P, Poly::constant(fu)), BigRat(1)});
            terms.push_back({RationalMap(c), make_rat(1, 2)});
            terms.push_back({RationalMap(t.Q), make_rat(-1, 2)});
            break;
        case DegreeClass::C3N1:
            out.phi = RationalMap(z * pow(t.P, 3), pow(t.Q, 3));
            terms.push_back({RationalMap(t.P, t.P.at_zero() * t.Q), BigRat(1)});
            break;
        case DegreeClass::C3N: {
            out.phi = RationalMap(z * (z - Poly::constant(r, 1)) * pow(t.P, 3), pow(t.Q, 3));
            const BigInt d = norm(t.u);
            const long n = to_long(d) / 3;
            const Poly Pr = reverse(t.P, n - 1), Rr = reverse(t.R, n);
            // base(0) = 1 by construction: (R*(0)/P*(0)) * P*/R*
            terms.push_back({RationalMap((Rr.at_zero() / Pr.at_zero()) * Pr, Rr), BigRat(1)});
            terms.push_back({omz, make_rat(1, 3)});
            break;
        }
    }
    out.theta = make_radical(std::move(terms));
    if (BigInt(out.phi.degree()) != norm(t.u))
        throw std::logic_error("to_transformation: degree(phi) != norm(u)");
    return out;
}

Transformation quadratic_cross(CrossKind kind) {
    const Ring r = Ring::Eisenstein;
    const Poly z = Poly::z(r), c = Poly::one_minus_z(r);
    Transformation out;
    out.u = std::nullopt;
    if (kind == CrossKind::E3_TO_E2) {
        out.source = FuncSide::F333;
        out.target = FuncSide::F126;
        // z^2 / (4(z-1))
        out.phi = RationalMap(z * z, Poly::constant(r, 4) * (z - Poly::constant(r, 1)));
        out.theta = make_radical({{RationalMap(c), make_rat(-1, 6)}});
    } else {
        out.source = FuncSide::FHyp;
        out.target = FuncSide::F126;
        // -4z / (z-1)^2
        out.phi = RationalMap(Poly::constant(r, -4) * z,
                              pow(z - Poly::constant(r, 1), 2));
        out.theta = make_radical({{RationalMap(c), make_rat(-1, 3)}});
    }
    return out;
}

Transformation compose_transformations(const Transformation& outer,
                                       const Transformation& inner) {
    if (inner.target != outer.source)
        throw std::invalid_argument(
            "compose_transformations: inner target does not feed outer source");
    Transformation out;
    out.source = inner.source;
    out.target = outer.target;
    out.phi = compose(outer.phi, inner.phi);
    std::vector<RadicalTerm> terms;
    for (const auto& t : outer.theta.terms)
        terms.push_back({compose(t.base, inner.phi), t.exp});
    for (const auto& t : inner.theta.terms) terms.push_back(t);
    out.theta = make_radical(std::move(terms));
    if (outer.u && inner.u && outer.u->ring == inner.u->ring)
        out.u = (*outer.u) * (*inner.u);
    return out;
}

bool verify_cross_identity(const Poly& P, const Poly& Q, const Poly& R) {
    const Ring r = P.ring();
    const Poly z = Poly::z(r), c = Poly::one_minus_z(r);
    return pow(R, 2) == c * pow(Q, 3) - z * z * pow(P, 6);
}

static bool perfect_power_up_to_constant(const Poly& p, int k) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    for (const auto& [f, m] : squarefree_multiplicities(p))
        if (m % k != 0) return false;
    return true;
}

bool cross_identity_map_level(const RationalMap& phi) {
    const Ring r = phi.ring();
    const Poly z = Poly::z(r);
    const Poly zm1 = z - Poly::constant(r, 1);
    // denominator: (z-1) times a perfect cube
    if (!divides(zm1, phi.den())) return false;
    if (!perfect_power_up_to_constant(exact_div(phi.den(), zm1), 3)) return false;
    // numerator: z^2 times a perfect sixth power
    if (!divides(z * z, phi.num())) return false;
    const Poly p6 = exact_div(phi.num(), z * z);
    if (!p6.is_zero() && divides(z, p6)) return false;
    if (!perfect_power_up_to_constant(p6, 6)) return false;
    // num(1 - phi) a perfect square
    const Poly w = phi.den() - phi.num();
    if (!perfect_power_up_to_constant(w, 2)) return false;
    return true;
}

bool transformation_equal(const Transformation& a, const Transformation& b) {
    return a.source == b.source && a.target == b.target && a.phi == b.phi &&
           radical_equal(a.theta, b.theta);
}

}  // namespace hpgforge
