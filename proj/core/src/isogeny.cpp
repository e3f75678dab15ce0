#include "hpgforge/isogeny.hpp"

#include <map>

namespace hpgforge {

Ring curve_ring(CurveId c) { return c == CurveId::E1 ? Ring::Gauss : Ring::Eisenstein; }

Family curve_family(CurveId c) {
    switch (c) {
        case CurveId::E1: return Family::E1;
        case CurveId::E2: return Family::E2;
        case CurveId::E3: return Family::E3;
    }
    throw std::logic_error("curve_family: unreachable");
}

std::ostream& operator<<(std::ostream& os, CurveId c) {
    switch (c) {
        case CurveId::E1: return os << "E1";
        case CurveId::E2: return os << "E2";
        case CurveId::E3: return os << "E3";
    }
    return os;
}

FuncElem ff_zero(CurveId c) {
    const Ring r = curve_ring(c);
    return FuncElem{c, {RationalMap(r), RationalMap(r), RationalMap(r)}};
}

FuncElem ff_const(CurveId c, const FieldElement& v) {
    FuncElem e = ff_zero(c);
    e.comp[0] = RationalMap::constant(v);
    return e;
}

FuncElem ff_x(CurveId c) {
    FuncElem e = ff_zero(c);
    e.comp[0] = RationalMap::z(curve_ring(c));
    return e;
}

FuncElem ff_y(CurveId c) {
    FuncElem e = ff_zero(c);
    e.comp[1] = RationalMap::constant(field_one(curve_ring(c)));
    return e;
}

static void check_curve(const FuncElem& a, const FuncElem& b) {
    if (a.curve != b.curve) throw std::invalid_argument("function field curve mismatch");
}

// y^2 on E1/E2 as a rational function of x; 1 - X^3 on E3.
static RationalMap ysq(CurveId c) {
    const Ring r = curve_ring(c);
    const Poly x = Poly::z(r);
    switch (c) {
        case CurveId::E1: return RationalMap(pow(x, 3) - x);
        case CurveId::E2: return RationalMap(pow(x, 3) - Poly::constant(r, 1));
        case CurveId::E3: return RationalMap(Poly::constant(r, 1) - pow(x, 3));
    }
    throw std::logic_error("ysq: unreachable");
}

FuncElem operator+(const FuncElem& a, const FuncElem& b) {
    check_curve(a, b);
    FuncElem o = ff_zero(a.curve);
    for (int k = 0; k < 3; ++k) o.comp[k] = a.comp[k] + b.comp[k];
    return o;
}

FuncElem operator-(const FuncElem& a, const FuncElem& b) {
    check_curve(a, b);
    FuncElem o = ff_zero(a.curve);
    for (int k = 0; k < 3; ++k) o.comp[k] = a.comp[k] - b.comp[k];
    return o;
}

FuncElem operator-(const FuncElem& a) {
    FuncElem o = ff_zero(a.curve);
    for (int k = 0; k < 3; ++k) o.comp[k] = -a.comp[k];
    return o;
}

FuncElem operator*(const FuncElem& a, const FuncElem& b) {
    check_curve(a, b);
    const RationalMap g = ysq(a.curve);
    FuncElem o = ff_zero(a.curve);
    if (a.curve != CurveId::E3) {
        o.comp[0] = a.comp[0] * b.comp[0] + a.comp[1] * b.comp[1] * g;
        o.comp[1] = a.comp[0] * b.comp[1] + a.comp[1] * b.comp[0];
        return o;
    }
    // E3: convolution with Y^3 = g = 1 - X^3
    RationalMap acc[5] = {RationalMap(Ring::Eisenstein), RationalMap(Ring::Eisenstein),
                          RationalMap(Ring::Eisenstein), RationalMap(Ring::Eisenstein),
                          RationalMap(Ring::Eisenstein)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) acc[i + j] = acc[i + j] + a.comp[i] * b.comp[j];
    o.comp[0] = acc[0] + acc[3] * g;
    o.comp[1] = acc[1] + acc[4] * g;
    o.comp[2] = acc[2];
    return o;
}

static FuncElem ff_inverse(const FuncElem& a) {
    if (a.is_zero()) throw std::domain_error("function field division by zero");
    const RationalMap g = ysq(a.curve);
    FuncElem o = ff_zero(a.curve);
    if (a.curve != CurveId::E3) {
        // 1/(p + q y) = (p - q y)/(p^2 - q^2 g)
        const RationalMap d = a.comp[0] * a.comp[0] - a.comp[1] * a.comp[1] * g;
        if (d.is_zero()) throw std::logic_error("ff_inverse: zero pseudo-norm");
        o.comp[0] = a.comp[0] / d;
        o.comp[1] = -a.comp[1] / d;
        return o;
    }
    // conjugates under Y -> wY
    const FieldElement w(Ring::Eisenstein, 0, 1);
    const FieldElement w2 = w * w;
    FuncElem c1 = a, c2 = a;
    c1.comp[1] = RationalMap::constant(w) * a.comp[1];
    c1.comp[2] = RationalMap::constant(w2) * a.comp[2];
    c2.comp[1] = RationalMap::constant(w2) * a.comp[1];
    c2.comp[2] = RationalMap::constant(w) * a.comp[2];
    FuncElem prod = c1 * c2;
    FuncElem nrm = a * prod;
    if (!nrm.comp[1].is_zero() || !nrm.comp[2].is_zero())
        throw std::logic_error("ff_inverse: E3 norm is not scalar");
    if (nrm.comp[0].is_zero()) throw std::logic_error("ff_inverse: zero norm");
    for (int k = 0; k < 3; ++k) o.comp[k] = prod.comp[k] / nrm.comp[0];
    return o;
}

FuncElem operator/(const FuncElem& a, const FuncElem& b) { return a * ff_inverse(b); }

// --- group law ------------------------------------------------------------

static IsogenyMap make_origin(CurveId c) {
    IsogenyMap m;
    m.curve = c;
    m.u = RingElement(curve_ring(c), 0, 0);
    m.X = ff_zero(c);
    m.Y = ff_zero(c);
    m.origin = true;
    return m;
}

static IsogenyMap weierstrass_add(const IsogenyMap& p1, const IsogenyMap& p2) {
    const CurveId c = p1.curve;
    const FuncElem dx = p1.X - p2.X;
    FuncElem lambda = ff_zero(c);
    if (dx.is_zero()) {
        const FuncElem sy = p1.Y + p2.Y;
        if (sy.is_zero()) return make_origin(c);
        // tangent/alternate chord: (x1^2 + x1 x2 + x2^2 - k)/(y1 + y2),
        // k = 1 on y^2 = x^3 - x and 0 on y^2 = x^3 - 1.
        FuncElem num = p1.X * p1.X + p1.X * p2.X + p2.X * p2.X;
        if (c == CurveId::E1)
            num = num - ff_const(c, field_one(curve_ring(c)));
        lambda = num / sy;
    } else {
        lambda = (p1.Y - p2.Y) / dx;
    }
    IsogenyMap out;
    out.curve = c;
    out.u = p1.u + p2.u;
    out.X = lambda * lambda - p1.X - p2.X;
    out.Y = -p1.Y - lambda * (out.X - p1.X);
    return out;
}

static IsogenyMap e3_tangent(const IsogenyMap& p) {
    const CurveId c = p.curve;
    const Ring r = curve_ring(c);
    const FuncElem one = ff_const(c, field_one(r));
    const FuncElem two = ff_const(c, FieldElement(r, 2));
    const FuncElem q3 = p.Y * p.Y * p.Y;
    const FuncElem dn = two * q3 - one;
    if (dn.is_zero()) throw std::logic_error("e3_tangent: denominator vanished");
    IsogenyMap out;
    out.curve = c;
    out.u = p.u + p.u;
    out.X = p.Y * (two - q3) / dn;
    out.Y = -(p.X * (one + q3) / dn);
    return out;
}

static IsogenyMap e3_chord(const IsogenyMap& p1, const IsogenyMap& p2) {
    const CurveId c = p1.curve;
    const FuncElem den = p1.X * p1.Y - p2.X * p2.Y;
    if (den.is_zero()) {
        // p2 equals p1 or -p1; -(X,Y) = (Y,X)
        if (p1.X == p2.X && p1.Y == p2.Y) return e3_tangent(p1);
        if (p1.X == p2.Y && p1.Y == p2.X) return make_origin(c);
        throw std::logic_error("e3_chord: unexpected degeneracy");
    }
    IsogenyMap out;
    out.curve = c;
    out.u = p1.u + p2.u;
    out.X = (p1.X * p2.Y * p2.Y - p2.X * p1.Y * p1.Y) / den;
    out.Y = (p2.X * p2.X * p1.Y - p1.X * p1.X * p2.Y) / den;
    return out;
}

IsogenyMap point_add(const IsogenyMap& p1, const IsogenyMap& p2) {
    if (p1.curve != p2.curve) throw std::invalid_argument("point_add: curve mismatch");
    if (p1.origin) return p2;
    if (p2.origin) return p1;
    if (p1.curve == CurveId::E3) return e3_chord(p1, p2);
    return weierstrass_add(p1, p2);
}

// --- the walk ---------------------------------------------------------------

namespace {

IsogenyMap identity_map(CurveId c) {
    IsogenyMap m;
    m.curve = c;
    m.u = RingElement(curve_ring(c), 1, 0);
    m.X = ff_x(c);
    m.Y = ff_y(c);
    return m;
}

FuncElem scale_elem(const FuncElem& e, const FieldElement& s) {
    FuncElem o = e;
    for (int k = 0; k < 3; ++k) o.comp[k] = RationalMap::constant(s) * e.comp[k];
    return o;
}

// Post-compose the coordinate automorphism of the unit eps.
IsogenyMap unit_compose(const IsogenyMap& m, const RingElement& eps) {
    const CurveId c = m.curve;
    const Ring r = curve_ring(c);
    IsogenyMap out = m;
    out.u = eps * m.u;
    if (c == CurveId::E1) {
        // i: (x,y) -> (-x, iy)
        RingElement e = eps;
        const FieldElement iu = unit_i(r);
        int k = 0;
        if (e == RingElement(r, 0, 1)) k = 1;
        else if (e == RingElement(r, -1, 0)) k = 2;
        else if (e == RingElement(r, 0, -1)) k = 3;
        else if (!(e == RingElement(r, 1, 0))) throw std::invalid_argument("not a unit");
        for (int j = 0; j < k; ++j) {
            out.X = scale_elem(out.X, FieldElement(r, -1));
            out.Y = scale_elem(out.Y, iu);
        }
        return out;
    }
    if (c == CurveId::E2) {
        // w: (x,y) -> (wx, y); -1: (x,y) -> (x,-y)
        RingElement e = eps;
        bool neg = false;
        if (e == RingElement(r, -1, 0) || e == RingElement(r, 0, -1) ||
            e == RingElement(r, 1, 1)) {  // -1, -w, -(w^2)
            neg = true;
            e = -e;
        }
        int k = 0;
        if (e == RingElement(r, 0, 1)) k = 1;
        else if (e == RingElement(r, -1, -1)) k = 2;
        else if (!(e == RingElement(r, 1, 0))) throw std::invalid_argument("not a unit");
        const FieldElement w = unit_omega(r);
        for (int j = 0; j < k; ++j) out.X = scale_elem(out.X, w);
        if (neg) out.Y = scale_elem(out.Y, FieldElement(r, -1));
        return out;
    }
    // E3: w: (X,Y) -> (w^2 X, w^2 Y); -1: swap coordinates
    RingElement e = eps;
    bool neg = false;
    if (e == RingElement(r, -1, 0) || e == RingElement(r, 0, -1) ||
        e == RingElement(r, 1, 1)) {
        neg = true;
        e = -e;
    }
    int k = 0;
    if (e == RingElement(r, 0, 1)) k = 1;
    else if (e == RingElement(r, -1, -1)) k = 2;
    else if (!(e == RingElement(r, 1, 0))) throw std::invalid_argument("not a unit");
    const FieldElement w2(r, -1, -1);
    for (int j = 0; j < k; ++j) {
        out.X = scale_elem(out.X, w2);
        out.Y = scale_elem(out.Y, w2);
    }
    if (neg) std::swap(out.X, out.Y);
    return out;
}

BigInt two_re_times(const RingElement& u, const RingElement& eps) {
    const RingElement p = u * conj(eps);
    if (u.ring == Ring::Gauss) return 2 * p.a;
    return 2 * p.a - p.b;
}

RingElement best_unit_step(const RingElement& u) {
    const auto us = units(u.ring);
    RingElement best = us[0];
    BigInt val = two_re_times(u, us[0]);
    for (const auto& e : us) {
        BigInt v = two_re_times(u, e);
        if (v > val) {
            val = v;
            best = e;
        }
    }
    if (val < 2) throw std::logic_error("isogeny walk: no descending unit step");
    return best;
}

IsogenyMap iso_walk(CurveId c, const RingElement& u, IsogenyCache& holder) {
    auto& memo = holder.memo;
    const auto key = std::make_tuple(static_cast<int>(c), to_long(u.a), to_long(u.b));
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    IsogenyMap out;
    if (u.is_unit()) {
        out = unit_compose(identity_map(c), u);
    } else {
        const RingElement eps = best_unit_step(u);
        const RingElement w = u - eps;
        IsogenyMap pe = iso_walk(c, eps, holder);
        if (w == eps) {
            out = point_add(pe, pe);
        } else {
            IsogenyMap pw = iso_walk(c, w, holder);
            out = point_add(pw, pe);
        }
    }
    memo.emplace(key, out);
    return out;
}

}  // namespace

IsogenyMap isogeny(CurveId c, const RingElement& u, IsogenyCache& cache) {
    if (u.is_zero()) throw std::domain_error("isogeny: u = 0");
    if (u.ring != curve_ring(c)) throw std::invalid_argument("isogeny: wrong ring");
    return iso_walk(c, u, cache);
}

IsogenyMap isogeny(CurveId c, const RingElement& u) {
    IsogenyCache cache;
    return isogeny(c, u, cache);
}

bool curve_relation_holds(const IsogenyMap& m) {
    if (m.origin) return true;
    const CurveId c = m.curve;
    const Ring r = curve_ring(c);
    if (c == CurveId::E3) {
        FuncElem rel = m.X * m.X * m.X + m.Y * m.Y * m.Y - ff_const(c, field_one(r));
        return rel.is_zero();
    }
    FuncElem cube = m.X * m.X * m.X;
    cube = (c == CurveId::E1) ? cube - m.X : cube - ff_const(c, field_one(r));
    FuncElem rel = m.Y * m.Y - cube;
    return rel.is_zero();
}

namespace {

FuncElem ff_eval_poly(const Poly& p, const FuncElem& x) {
    FuncElem acc = ff_zero(x.curve);
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * x + ff_const(x.curve, p.coeff(k));
    return acc;
}

FuncElem ff_eval_ratmap(const RationalMap& f, const FuncElem& x) {
    return ff_eval_poly(f.num(), x) / ff_eval_poly(f.den(), x);
}

FuncElem ff_eval_elem(const FuncElem& e, const FuncElem& x, const FuncElem& y) {
    FuncElem acc = ff_zero(x.curve);
    FuncElem ypow = ff_const(x.curve, field_one(curve_ring(x.curve)));
    for (int k = 0; k < 3; ++k) {
        if (!e.comp[k].is_zero()) acc = acc + ff_eval_ratmap(e.comp[k], x) * ypow;
        ypow = ypow * y;
    }
    return acc;
}

}  // namespace

IsogenyMap compose_isogenies(const IsogenyMap& outer, const IsogenyMap& inner) {
    if (outer.curve != inner.curve)
        throw std::invalid_argument("compose_isogenies: curve mismatch");
    if (outer.origin || inner.origin) return outer.origin ? outer : inner;
    IsogenyMap out;
    out.curve = outer.curve;
    out.u = outer.u * inner.u;
    out.X = ff_eval_elem(outer.X, inner.X, inner.Y);
    out.Y = ff_eval_elem(outer.Y, inner.X, inner.Y);
    return out;
}

Decomposition structural_decompose(const IsogenyMap& m) {
    if (m.origin) throw std::invalid_argument("structural_decompose: origin map");
    const CurveId c = m.curve;
    const Ring r = curve_ring(c);
    const RationalMap x = RationalMap::z(r);
    Decomposition out;
    if (c == CurveId::E1 || c == CurveId::E2) {
        if (!m.X.comp[1].is_zero())
            throw std::logic_error("structural_decompose: x-map involves y");
        const long k = (c == CurveId::E1) ? 2 : 3;
        out.mu = compress_power(m.X.comp[0] / x, k);
        out.mu0 = limit_at_infinity(out.mu);
        const FieldElement want = inverse(FieldElement(m.u) * FieldElement(m.u));
        if (!(out.mu0 == want))
            throw std::logic_error("structural_decompose: mu0 != 1/u^2");
        return out;
    }
    const bool a0 = !m.X.comp[0].is_zero(), a1 = !m.X.comp[1].is_zero(),
               a2 = !m.X.comp[2].is_zero();
    if (a0 && !a1 && !a2) {
        out.form = E3Form::F1;
        out.mu = compress_power(m.X.comp[0] / x, 3);
        out.mu0 = limit_at_infinity(out.mu);
        if (!(out.mu0 == inverse(FieldElement(m.u))))
            throw std::logic_error("structural_decompose: F1 mu0 != 1/u");
    } else if (a1 && !a0 && !a2) {
        out.form = E3Form::F2;
        out.mu = compress_power(m.X.comp[1], 3);
        out.mu0 = limit_at_infinity(out.mu);
        if (!(out.mu0 == -inverse(FieldElement(m.u))))
            throw std::logic_error("structural_decompose: F2 nu0 != -1/u");
    } else if (a2 && !a0 && !a1) {
        out.form = E3Form::F3;
        // X-map = mu(s) Y^2 / X, so mu(X^3) = X * comp[2]; eta = mu (s-1)/s.
        const RationalMap mu = compress_power(x * m.X.comp[2], 3);
        const Poly s = Poly::z(r);
        const RationalMap eta =
            mu * RationalMap(s - Poly::constant(r, 1)) / RationalMap(s);
        out.mu = eta;
        out.mu0 = limit_at_infinity(eta);
        // eta0 times u is a root of unity: its value at infinity sees the
        // fiber over X = 0 and is pinned only up to that unit.
        const FieldElement prod = out.mu0 * FieldElement(m.u);
        if (!(norm(prod) == 1))
            throw std::logic_error("structural_decompose: F3 eta0 * u is not a unit");
    } else {
        throw std::logic_error("structural_decompose: X-map matches no E3 form");
    }
    if (out.form != e3_form_of(m.u))
        throw std::logic_error("structural_decompose: form/residue mismatch");
    return out;
}

RationalMap oracle_pullback(CurveId c, const RingElement& u) {
    IsogenyCache cache;
    return oracle_pullback(c, u, cache);
}

RationalMap oracle_pullback(CurveId c, const RingElement& u, IsogenyCache& cache) {
    const IsogenyMap m = isogeny(c, u, cache);
    FuncElem good = m.X;
    long k = 3;
    if (c == CurveId::E1) {
        k = 2;
    } else if (c == CurveId::E3) {
        // For the swapped form the Y-coordinate is the structurally good one.
        if (structural_decompose(m).form == E3Form::F2) good = m.Y;
    }
    FuncElem h = good;
    for (long j = 1; j < k; ++j) h = h * good;
    if (!h.comp[1].is_zero() || !h.comp[2].is_zero())
        throw std::logic_error("oracle_pullback: coordinate power is not y-free");
    // phi(x)^k = G(x^k); the bound transforms as z -> 1/G(1/z).
    const RationalMap G = compress_power(h.comp[0], k);
    RationalMap arg = inverse(subst_reciprocal(G));
    if (BigInt(arg.degree()) != norm(u))
        throw std::logic_error("oracle_pullback: degree != norm(u)");
    return arg;
}

}  // namespace hpgforge
