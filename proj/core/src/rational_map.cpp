#include "hpgforge/rational_map.hpp"

#include <sstream>

namespace hpgforge {

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.ring() != den_.ring()) throw std::invalid_argument("rational map ring mismatch");
    if (den_.is_zero()) throw std::domain_error("rational map with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.ring(), 1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const FieldElement lc = den_.lead();
    if (!lc.is_one()) {
        num_ = inverse(lc) * num_;
        den_ = inverse(lc) * den_;
    }
}

RationalMap operator+(const RationalMap& f, const RationalMap& g) {
    return RationalMap(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

RationalMap operator-(const RationalMap& f, const RationalMap& g) {
    return RationalMap(f.num() * g.den() - g.num() * f.den(), f.den() * g.den());
}

RationalMap operator*(const RationalMap& f, const RationalMap& g) {
    return RationalMap(f.num() * g.num(), f.den() * g.den());
}

RationalMap operator/(const RationalMap& f, const RationalMap& g) {
    if (g.is_zero()) throw std::domain_error("rational map division by zero");
    return RationalMap(f.num() * g.den(), f.den() * g.num());
}

RationalMap operator-(const RationalMap& f) { return RationalMap(-f.num(), f.den()); }

RationalMap inverse(const RationalMap& f) {
    if (f.is_zero()) throw std::domain_error("inverse of zero map");
    return RationalMap(f.den(), f.num());
}

RationalMap pow(const RationalMap& f, long e) {
    if (e < 0) return pow(inverse(f), -e);
    RationalMap acc = RationalMap::constant(field_one(f.ring()));
    RationalMap base = f;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FieldElement eval(const RationalMap& f, const FieldElement& x) {
    const FieldElement d = eval(f.den(), x);
    if (d.is_zero()) throw std::domain_error("rational map evaluated at a pole");
    return eval(f.num(), x) / d;
}

RationalMap compose(const Poly& p, const RationalMap& f) {
    // Horner over rational maps, cleared by den^deg to avoid mid reductions.
    if (p.is_zero()) return RationalMap(p.ring());
    const long d = p.degree();
    Poly denpow = Poly::constant(p.ring(), 1);
    // p(f) = sum c_k num^k den^(d-k) / den^d
    std::vector<Poly> numpows(static_cast<size_t>(d) + 1, Poly::constant(p.ring(), 1));
    for (long k = 1; k <= d; ++k)
        numpows[static_cast<size_t>(k)] = numpows[static_cast<size_t>(k - 1)] * f.num();
    Poly acc(p.ring());
    Poly dpow = Poly::constant(p.ring(), 1);
    for (long k = d; k >= 0; --k) {
        // term c_k * num^k * den^(d-k)
        acc = acc + p.coeff(k) * (numpows[static_cast<size_t>(k)] * dpow);
        if (k > 0) dpow = dpow * f.den();
    }
    for (long k = 0; k < d; ++k) denpow = denpow * f.den();
    return RationalMap(acc, denpow);
}

RationalMap compose(const RationalMap& f, const RationalMap& g) {
    // f(g) = N(g)/D(g), cleared by g.den^max.
    const long dn = f.num().degree(), dd = f.den().degree();
    const long d = std::max(dn, dd);
    auto lifted = [&](const Poly& p) {
        Poly acc(p.ring());
        for (long k = 0; k <= p.degree(); ++k) {
            Poly t = Poly::constant(p.coeff(k));
            for (long j = 0; j < k; ++j) t = t * g.num();
            for (long j = k; j < d; ++j) t = t * g.den();
            acc = acc + t;
        }
        return acc;
    };
    return RationalMap(lifted(f.num()), lifted(f.den()));
}

static Poly compress_poly(const Poly& p, long k) {
    std::vector<FieldElement> c;
    for (long j = 0; j <= p.degree(); ++j) {
        if (j % k == 0) {
            c.push_back(p.coeff(j));
        } else if (!p.coeff(j).is_zero()) {
            throw std::domain_error("compress_power: exponent not divisible");
        }
    }
    return Poly(p.ring(), std::move(c));
}

RationalMap compress_power(const RationalMap& f, long k) {
    return RationalMap(compress_poly(f.num(), k), compress_poly(f.den(), k));
}

RationalMap subst_reciprocal(const RationalMap& f) {
    const long d = std::max(f.num().degree(), f.den().degree());
    return RationalMap(reverse(f.num(), d), reverse(f.den(), d));
}

FieldElement limit_at_infinity(const RationalMap& f) {
    if (f.num().degree() > f.den().degree())
        throw std::domain_error("limit_at_infinity: map has a pole at infinity");
    if (f.num().degree() < f.den().degree()) return field_zero(f.ring());
    return f.num().lead() / f.den().lead();
}

std::string to_string(const RationalMap& f, const std::string& var) {
    // display with den(0) = 1 where possible; the canonical form keeps the
    // denominator monic instead, which reads poorly for small maps
    Poly num = f.num(), den = f.den();
    const FieldElement d0 = den.at_zero();
    if (!d0.is_zero() && !d0.is_one()) {
        num = inverse(d0) * num;
        den = inverse(d0) * den;
    }
    std::ostringstream os;
    os << "(" << to_string(num, var) << ") / (" << to_string(den, var) << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalMap& f) { return os << to_string(f); }

}  // namespace hpgforge
