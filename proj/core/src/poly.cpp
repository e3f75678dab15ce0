#include "hpgforge/poly.hpp"

#include <sstream>

namespace hpgforge {

Poly Poly::from_ints(Ring r, const std::vector<long>& re) {
    std::vector<FieldElement> c;
    c.reserve(re.size());
    for (long v : re) c.emplace_back(r, v);
    return Poly(r, std::move(c));
}

static void check_ring(const Poly& p, const Poly& q) {
    if (p.ring() != q.ring()) throw std::invalid_argument("poly ring mismatch");
}

Poly operator+(const Poly& p, const Poly& q) {
    check_ring(p, q);
    std::vector<FieldElement> c(std::max(p.coeffs().size(), q.coeffs().size()),
                                field_zero(p.ring()));
    for (size_t k = 0; k < c.size(); ++k)
        c[k] = p.coeff(static_cast<long>(k)) + q.coeff(static_cast<long>(k));
    return Poly(p.ring(), std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }

Poly operator-(const Poly& p) {
    std::vector<FieldElement> c = p.coeffs();
    for (auto& v : c) v = -v;
    return Poly(p.ring(), std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
    check_ring(p, q);
    if (p.is_zero() || q.is_zero()) return Poly(p.ring());
    std::vector<FieldElement> c(p.coeffs().size() + q.coeffs().size() - 1, field_zero(p.ring()));
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        for (size_t j = 0; j < q.coeffs().size(); ++j)
            c[i + j] = c[i + j] + p.coeffs()[i] * q.coeffs()[j];
    return Poly(p.ring(), std::move(c));
}

Poly operator*(const FieldElement& s, const Poly& p) {
    std::vector<FieldElement> c = p.coeffs();
    for (auto& v : c) v = s * v;
    return Poly(p.ring(), std::move(c));
}

Poly pow(const Poly& p, unsigned long e) {
    Poly acc = Poly::constant(p.ring(), 1);
    Poly base = p;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Poly derivative(const Poly& p) {
    if (p.degree() < 1) return Poly(p.ring());
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size() - 1);
    for (long k = 1; k <= p.degree(); ++k)
        c.push_back(FieldElement(p.ring(), k) * p.coeff(k));
    return Poly(p.ring(), std::move(c));
}

FieldElement eval(const Poly& p, const FieldElement& x) {
    FieldElement acc = field_zero(p.ring());
    for (long k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
    return acc;
}

Poly compose(const Poly& p, const Poly& q) {
    check_ring(p, q);
    Poly acc(p.ring());
    for (long k = p.degree(); k >= 0; --k)
        acc = acc * q + Poly::constant(p.coeff(k));
    return acc;
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return inverse(p.lead()) * p;
}

Poly scale(const Poly& p, const FieldElement& s) { return inverse(s) * p; }

std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
    check_ring(p, q);
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<FieldElement> rem = p.coeffs();
    const long dq = q.degree();
    if (p.degree() < dq) return {Poly(p.ring()), p};
    std::vector<FieldElement> quo(p.degree() - dq + 1, field_zero(p.ring()));
    const FieldElement linv = inverse(q.lead());
    for (long k = p.degree(); k >= dq; --k) {
        FieldElement c = rem[static_cast<size_t>(k)] * linv;
        quo[static_cast<size_t>(k - dq)] = c;
        if (c.is_zero()) continue;
        for (long j = 0; j <= dq; ++j)
            rem[static_cast<size_t>(k - dq + j)] =
                rem[static_cast<size_t>(k - dq + j)] - c * q.coeff(j);
    }
    return {Poly(p.ring(), std::move(quo)), Poly(p.ring(), std::move(rem))};
}

Poly exact_div(const Poly& p, const Poly& q) {
    auto [quo, rem] = divmod(p, q);
    if (!rem.is_zero())
        throw std::domain_error("poly exact_div: nonzero remainder (broken identity upstream)");
    return quo;
}

bool divides(const Poly& q, const Poly& p) {
    if (q.is_zero()) return p.is_zero();
    return divmod(p, q).second.is_zero();
}

// --- gcd via primitive PRS over the ring of integers ---------------------

namespace {

// A poly with ring-integer coefficients, stored as RingElements.
struct ZPoly {
    Ring ring;
    std::vector<RingElement> c;  // ascending, stripped
    void strip() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
};

BigInt coeff_lcm_den(const Poly& p) {
    BigInt l = 1;
    for (const auto& v : p.coeffs()) {
        l = l / gcd(l, BigInt(v.a.get_den())) * BigInt(v.a.get_den());
        l = l / gcd(l, BigInt(v.b.get_den())) * BigInt(v.b.get_den());
    }
    return l;
}

ZPoly clear_denominators(const Poly& p) {
    ZPoly z{p.ring(), {}};
    const BigInt l = coeff_lcm_den(p);
    const FieldElement s(p.ring(), BigRat(l), BigRat(0));
    for (const auto& v : p.coeffs()) {
        FieldElement w = s * v;
        z.c.push_back(RingElement(p.ring(), BigInt(w.a.get_num()), BigInt(w.b.get_num())));
    }
    z.strip();
    return z;
}

RingElement zcontent(const ZPoly& p) {
    RingElement g(p.ring, 0, 0);
    for (const auto& v : p.c) {
        g = ring_gcd(g, v);
        if (g.is_unit()) break;
    }
    return g;
}

ZPoly zprimitive(const ZPoly& p) {
    if (p.c.empty()) return p;
    RingElement g = zcontent(p);
    ZPoly out{p.ring, {}};
    out.c.reserve(p.c.size());
    for (const auto& v : p.c) out.c.push_back(exact_div(v, g));
    return out;
}

ZPoly zmul_scalar(const ZPoly& p, const RingElement& s) {
    ZPoly out{p.ring, {}};
    out.c.reserve(p.c.size());
    for (const auto& v : p.c) out.c.push_back(v * s);
    out.strip();
    return out;
}

// Pseudo-remainder of lead(q)^(dp-dq+1) * p by q.
ZPoly zpseudo_rem(ZPoly p, const ZPoly& q) {
    const long dq = q.degree();
    while (p.degree() >= dq) {
        const RingElement c = p.c.back();
        const long shift = p.degree() - dq;
        // p = lead(q)*p - c * z^shift * q
        ZPoly t = zmul_scalar(p, q.c.back());
        for (long j = 0; j <= dq; ++j) {
            t.c[static_cast<size_t>(shift + j)] =
                t.c[static_cast<size_t>(shift + j)] - c * q.c[static_cast<size_t>(j)];
        }
        t.strip();
        p = std::move(t);
        if (p.c.empty()) break;
    }
    return p;
}

Poly zpoly_to_monic_poly(const ZPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.c.size());
    for (const auto& v : p.c) c.emplace_back(v);
    return monic(Poly(p.ring, std::move(c)));
}

// --- modular coprimality fast path ---------------------------------------
// p = 15*2^27 + 1 is 1 mod 4 and 1 mod 3, so both i and w have images in
// F_p; if the reduced gcd is constant, the exact gcd is 1.

constexpr uint64_t kModP = 2013265921;

uint64_t mulmod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % kModP);
}

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a) { return powmod(a, kModP - 2); }

uint64_t imag_unit_mod(Ring r) {
    static const uint64_t sqrt_m1 = [] {
        for (uint64_t g = 2;; ++g) {
            const uint64_t c = powmod(g, (kModP - 1) / 4);
            if (mulmod(c, c) == kModP - 1) return c;  // c^2 == -1
        }
    }();
    static const uint64_t omega = [] {
        for (uint64_t g = 2;; ++g) {
            const uint64_t c = powmod(g, (kModP - 1) / 3);
            if (c != 1) return c;
        }
    }();
    return r == Ring::Gauss ? sqrt_m1 : omega;
}

uint64_t rat_mod(const BigRat& q) {
    const uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kModP);
    const uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kModP);
    if (den == 0) throw std::overflow_error("rat_mod: denominator divisible by p");
    return mulmod(num, invmod(den));
}

std::vector<uint64_t> poly_mod(const Poly& p) {
    const uint64_t iu = imag_unit_mod(p.ring());
    std::vector<uint64_t> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back((rat_mod(c.a) + mulmod(rat_mod(c.b), iu)) % kModP);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// True only when gcd(p, q) = 1 is certain.
bool certainly_coprime(const Poly& p, const Poly& q) {
    if (p.degree() < 1 || q.degree() < 1) return false;
    try {
        std::vector<uint64_t> a = poly_mod(p), b = poly_mod(q);
        // degree drop under reduction would break the bound argument
        if (static_cast<long>(a.size()) - 1 != p.degree()) return false;
        if (static_cast<long>(b.size()) - 1 != q.degree()) return false;
        while (!b.empty()) {
            if (b.size() == 1) return true;  // constant nonzero gcd mod p
            // a mod b (b.size() >= 2 here)
            const uint64_t linv = invmod(b.back());
            for (size_t k = a.size(); k-- > b.size() - 1;) {
                const uint64_t c = mulmod(a[k], linv);
                if (c == 0) continue;
                const size_t shift = k - (b.size() - 1);
                for (size_t j = 0; j < b.size(); ++j) {
                    uint64_t& slot = a[shift + j];
                    slot = (slot + kModP - mulmod(c, b[j])) % kModP;
                }
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
            std::swap(a, b);
        }
        return false;
    } catch (const std::overflow_error&) {
        return false;
    }
}

}  // namespace

Poly gcd(const Poly& p, const Poly& q) {
    check_ring(p, q);
    if (p.is_zero()) return monic(q);
    if (q.is_zero()) return monic(p);
    if (certainly_coprime(p, q)) return Poly::constant(p.ring(), 1);
    ZPoly a = zprimitive(clear_denominators(p));
    ZPoly b = zprimitive(clear_denominators(q));
    if (a.degree() < b.degree()) std::swap(a, b);
    while (true) {
        if (b.c.empty()) break;
        if (b.degree() == 0) return Poly::constant(p.ring(), 1);
        ZPoly r = zpseudo_rem(a, b);
        a = std::move(b);
        b = zprimitive(r);
    }
    return zpoly_to_monic_poly(a);
}

std::vector<std::pair<Poly, int>> squarefree_multiplicities(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    // Yun's algorithm (characteristic zero).
    Poly a = monic(p);
    Poly d = derivative(a);
    Poly g = gcd(a, d);
    Poly w = exact_div(a, g);
    Poly y = exact_div(d, g);
    int i = 1;
    while (w.degree() > 0) {
        Poly zp = y - derivative(w);
        Poly f = gcd(w, zp);
        if (f.degree() > 0) out.emplace_back(monic(f), i);
        w = exact_div(w, f);
        y = exact_div(zp, f);
        ++i;
    }
    return out;
}

Poly square_part(const Poly& p) {
    Poly h = Poly::constant(p.ring(), 1);
    if (p.is_zero() || p.degree() == 0) return h;
    for (const auto& [f, m] : squarefree_multiplicities(p))
        if (m >= 2) h = h * pow(f, static_cast<unsigned long>(m / 2));
    return monic(h);
}

Poly poly_sqrt(const Poly& p, const FieldElement& anchor) {
    if (p.is_zero()) return Poly(p.ring());
    if (p.degree() % 2 != 0) throw std::domain_error("poly_sqrt: odd degree");
    if (!(anchor * anchor == p.at_zero()))
        throw std::domain_error("poly_sqrt: anchor^2 != constant term");
    if (anchor.is_zero()) throw std::domain_error("poly_sqrt: zero anchor unsupported");
    const long m = p.degree() / 2;
    std::vector<FieldElement> r(static_cast<size_t>(m) + 1, field_zero(p.ring()));
    r[0] = anchor;
    const FieldElement half = inverse(FieldElement(p.ring(), 2) * anchor);
    for (long k = 1; k <= m; ++k) {
        FieldElement s = p.coeff(k);
        for (long j = 1; j < k; ++j)
            if (j <= m && k - j <= m) s = s - r[static_cast<size_t>(j)] * r[static_cast<size_t>(k - j)];
        r[static_cast<size_t>(k)] = s * half;
    }
    Poly root(p.ring(), std::move(r));
    if (!(root * root == p)) throw std::domain_error("poly_sqrt: input is not a perfect square");
    return root;
}

Poly poly_cbrt(const Poly& p, const FieldElement& anchor) {
    if (p.is_zero()) return Poly(p.ring());
    if (p.degree() % 3 != 0) throw std::domain_error("poly_cbrt: degree not divisible by 3");
    if (!(anchor * anchor * anchor == p.at_zero()))
        throw std::domain_error("poly_cbrt: anchor^3 != constant term");
    if (anchor.is_zero()) throw std::domain_error("poly_cbrt: zero anchor unsupported");
    const long m = p.degree() / 3;
    std::vector<FieldElement> r(static_cast<size_t>(m) + 1, field_zero(p.ring()));
    r[0] = anchor;
    const FieldElement inv3a2 = inverse(FieldElement(p.ring(), 3) * anchor * anchor);
    for (long k = 1; k <= m; ++k) {
        // sum over i+j+l = k with all indices < k already known except 3*a^2*r_k
        FieldElement s = p.coeff(k);
        for (long i = 0; i <= k; ++i) {
            if (i > m) continue;
            for (long j = 0; i + j <= k; ++j) {
                const long l = k - i - j;
                if (j > m || l > m) continue;
                if (i == k || j == k || l == k) continue;  // involves r_k
                s = s - r[static_cast<size_t>(i)] * r[static_cast<size_t>(j)] *
                            r[static_cast<size_t>(l)];
            }
        }
        r[static_cast<size_t>(k)] = s * inv3a2;
    }
    Poly root(p.ring(), std::move(r));
    if (!(root * root * root == p)) throw std::domain_error("poly_cbrt: input is not a perfect cube");
    return root;
}

Poly reverse(const Poly& p, long n) {
    if (n < p.degree()) throw std::invalid_argument("reverse: n below degree");
    std::vector<FieldElement> c(static_cast<size_t>(n) + 1, field_zero(p.ring()));
    for (long k = 0; k <= p.degree(); ++k) c[static_cast<size_t>(n - k)] = p.coeff(k);
    return Poly(p.ring(), std::move(c));
}

std::string to_string(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = 0; k <= p.degree(); ++k) {
        const FieldElement& c = p.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        os << "(" << to_string(c) << ")";
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace hpgforge
