#include "hpgforge/numeric.hpp"

#include <vector>

namespace hpgforge {

namespace {

HpComplex cplx_from_long(long x, mpfr_prec_t bits) {
    HpComplex c(bits);
    mpfr_set_si(c.re.raw(), x, MPFR_RNDN);
    return c;
}

HpReal real_rat(const BigRat& q, mpfr_prec_t bits) { return HpReal::from_rat(q, bits); }

}  // namespace

HpComplex to_complex(const FieldElement& v, mpfr_prec_t bits) {
    HpComplex c(bits);
    if (v.ring == Ring::Gauss) {
        c.re = real_rat(v.a, bits);
        c.im = real_rat(v.b, bits);
        return c;
    }
    // a + b*w with w = (-1 + i sqrt(3))/2
    const HpReal b = real_rat(v.b, bits);
    const HpReal half = HpReal::from_rat(make_rat(1, 2), bits);
    c.re = real_rat(v.a, bits) - half * b;
    c.im = half * b * sqrt(HpReal::from_long(3, bits));
    return c;
}

HpComplex eval_hp(const Poly& p, const HpComplex& z) {
    const mpfr_prec_t bits = z.prec();
    HpComplex acc(bits);
    for (long k = p.degree(); k >= 0; --k) acc = acc * z + to_complex(p.coeff(k), bits);
    return acc;
}

HpComplex eval_hp(const RationalMap& f, const HpComplex& z) {
    return eval_hp(f.num(), z) / eval_hp(f.den(), z);
}

HpComplex eval_hp(const RadicalFactor& t, const HpComplex& z) {
    HpComplex acc = cplx_from_long(1, z.prec());
    for (const auto& term : t.terms) {
        const HpComplex b = eval_hp(term.base, z);
        acc = acc * pow_rat(b, term.exp);
    }
    return acc;
}

HpComplex hpg2f1(const HpgParams& p, const HpComplex& z, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    HpComplex zz = z;
    if (zz.prec() < bits) {
        HpComplex lifted(bits);
        mpfr_set(lifted.re.raw(), z.re.raw(), MPFR_RNDN);
        mpfr_set(lifted.im.raw(), z.im.raw(), MPFR_RNDN);
        zz = lifted;
    }
    {
        const double az = abs(zz).to_double();
        if (az > 0.95) throw std::domain_error("hpg2f1: |z| > 0.95");
    }
    if (p.c <= 0 && is_integer(p.c)) throw std::domain_error("hpg2f1: c is a non-positive integer");
    HpComplex term = cplx_from_long(1, bits);
    HpComplex sum = term;
    const HpReal thresh_scale =
        pow(HpReal::from_long(10, bits), HpReal::from_long(-(prec + 10), bits));
    for (long n = 0; n < 1000000; ++n) {
        // term *= (a+n)(b+n) / ((c+n)(n+1)) * z
        const BigRat num = (p.a + n) * (p.b + n);
        const BigRat den = (p.c + n) * BigRat(n + 1);
        const HpReal f = real_rat(num / den, bits);
        term = HpComplex{term.re * f, term.im * f} * zz;
        sum = sum + term;
        if (n > 4 && abs(term) < thresh_scale * abs(sum)) break;
    }
    return sum;
}

HpComplex hpg2f1_ext(const HpgParams& p, const HpComplex& z, long prec) {
    const double az = abs(z).to_double();
    if (az <= 0.95) return hpg2f1(p, z, prec);
    if (!z.im.is_zero() || z.re.sign() >= 0)
        throw std::domain_error("hpg2f1_ext: extension only along the negative real axis");
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    HpComplex one = cplx_from_long(1, bits);
    HpComplex zb(bits);
    mpfr_set(zb.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(zb.im.raw(), z.im.raw(), MPFR_RNDN);
    const HpComplex w = zb / (zb - one);
    HpgParams q{p.a, p.c - p.b, p.c};
    const HpComplex pref = pow_rat(one - zb, -p.a);
    return pref * hpg2f1(q, w, prec);
}

// --- gamma via Spouge ------------------------------------------------------

HpReal gamma_rat(const BigRat& s, long prec) {
    if (s <= 0) throw std::domain_error("gamma_rat: positive arguments only");
    const long work_digits = prec + 20;
    const mpfr_prec_t bits = digits_to_bits(work_digits + 10);
    // Spouge: Gamma(z+1) = (z+a)^(z+1/2) e^(-(z+a)) [sqrt(2 pi) + sum c_k/(z+k)],
    // relative error ~ a^(-1/2) (2 pi)^-(a+1/2), i.e. ~0.798 digits per unit a.
    const long a = static_cast<long>(static_cast<double>(work_digits) / 0.79818) + 4;
    const HpReal z = real_rat(s - 1, bits);  // Gamma(s) = Gamma(z+1)
    HpReal acc = sqrt(HpReal::pi(bits) * HpReal::from_long(2, bits));
    HpReal factorial = HpReal::from_long(1, bits);  // (k-1)!
    for (long k = 1; k < a; ++k) {
        if (k > 1) factorial = factorial * HpReal::from_long(k - 1, bits);
        const HpReal ak = HpReal::from_long(a - k, bits);
        HpReal ck = pow(ak, HpReal::from_rat(make_rat(2 * k - 1, 2), bits)) * exp(ak) / factorial;
        if (k % 2 == 0) ck = -ck;
        acc = acc + ck / (z + HpReal::from_long(k, bits));
    }
    const HpReal za = z + HpReal::from_long(a, bits);
    return pow(za, z + HpReal::from_rat(make_rat(1, 2), bits)) * exp(-za) * acc;
}

HpReal gamma_const(GammaTag tag, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    switch (tag) {
        case GammaTag::G14: return gamma_rat(make_rat(1, 4), prec);
        case GammaTag::G13: return gamma_rat(make_rat(1, 3), prec);
        case GammaTag::G12: return gamma_rat(make_rat(1, 2), prec);
        case GammaTag::G16: return gamma_rat(make_rat(1, 6), prec);
        case GammaTag::PI: return HpReal::pi(bits);
        case GammaTag::SQRT2PI:
            return sqrt(HpReal::pi(bits) * HpReal::from_long(2, bits));
    }
    throw std::logic_error("gamma_const: unreachable");
}

// --- identity verification ---------------------------------------------

std::vector<BigRat> branch_safe_points(const Transformation& t, int count, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    // The identities are germ identities at z = 0, so the whole segment
    // (0, z_max] must keep |phi| inside the disc and every radical base off
    // the left half-plane; screen a dense grid, not just the sample points.
    BigRat base = make_rat(1, 1000);
    for (int attempt = 0; attempt < 80; ++attempt) {
        const BigRat zmax = base * BigRat(count);
        bool ok = true;
        const int grid = 16 * count;
        for (int j = 1; j <= grid && ok; ++j) {
            const BigRat zq = zmax * BigRat(j) / BigRat(grid);
            const HpComplex z{real_rat(zq, bits), HpReal(bits)};
            const HpComplex ph = eval_hp(t.phi, z);
            if (abs(ph).to_double() >= 0.5) { ok = false; break; }
            for (const auto& term : t.theta.terms) {
                const HpComplex b = eval_hp(term.base, z);
                if (b.re.sign() <= 0) { ok = false; break; }
            }
        }
        if (ok) {
            std::vector<BigRat> pts;
            for (int j = 1; j <= count; ++j) pts.push_back(base * BigRat(j));
            return pts;
        }
        base = base / 2;
    }
    throw std::domain_error("branch_safe_points: no safe disc found");
}

HpReal verify_identity(const Transformation& t, const std::vector<BigRat>& points, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    const HpgParams ps = side_params(t.source);
    const HpgParams pt = side_params(t.target);
    HpReal worst(bits);  // zero
    for (const BigRat& zq : points) {
        const HpComplex z{real_rat(zq, bits), HpReal(bits)};
        const HpComplex lhs = hpg2f1(ps, z, prec);
        const HpComplex phi = eval_hp(t.phi, z);
        const HpComplex theta = eval_hp(t.theta, z);
        const HpComplex rhs = theta * hpg2f1(pt, phi, prec);
        const HpReal err = abs(lhs - rhs) / abs(lhs);
        if (worst < err) worst = err;
    }
    return worst;
}

// --- connection formulas -------------------------------------------------

namespace {

// F(z) = z^a/a 2F1(a, 1-b; 1+a; z) and its companions; everything handled
// on real segments where the principal branches are unambiguous.
HpComplex term_F0(const BigRat& a, const BigRat& b, const HpComplex& z, long prec) {
    HpgParams p{a, 1 - b, 1 + a};
    const HpComplex f = hpg2f1_ext(p, z, prec);
    return pow_rat(z, a) * f / to_complex(FieldElement(Ring::Gauss, a, BigRat(0)), z.prec());
}

HpComplex term_F1(const BigRat& a, const BigRat& b, const HpComplex& z, long prec) {
    // (1-z)^b / b * 2F1(b, 1-a; 1+b; 1-z)
    HpgParams p{b, 1 - a, 1 + b};
    HpComplex one = cplx_from_long(1, z.prec());
    const HpComplex f = hpg2f1_ext(p, one - z, prec);
    return pow_rat(one - z, b) * f /
           to_complex(FieldElement(Ring::Gauss, b, BigRat(0)), z.prec());
}

}  // namespace

HpReal verify_connection(ConnectionCase which, const BigRat& a, const BigRat& b,
                         const std::vector<BigRat>& points, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    const BigRat c = 1 - a - b;
    HpReal worst(bits);
    auto gam = [&](const BigRat& s) { return gamma_rat(s, prec); };
    for (const BigRat& zq : points) {
        const HpComplex z{real_rat(zq, bits), HpReal(bits)};
        HpComplex lhs(bits);
        HpReal target(bits);
        switch (which) {
            case ConnectionCase::CON01: {
                lhs = term_F0(a, b, z, prec) + term_F1(a, b, z, prec);
                target = gam(a) * gam(b) / gam(a + b);
                break;
            }
            case ConnectionCase::SPEC_144: {
                // points are x-values: 2 sqrt(x) F(x^2) + sqrt(1-x^2) G(1-x^2)
                const HpComplex x = z, one = cplx_from_long(1, bits);
                const HpComplex x2 = x * x;
                const HpComplex t1 =
                    cplx_from_long(2, bits) * pow_rat(x, make_rat(1, 2)) *
                    hpg2f1({make_rat(1, 2), make_rat(1, 4), make_rat(5, 4)}, x2, prec);
                const HpComplex t2 =
                    pow_rat(one - x2, make_rat(1, 2)) *
                    hpg2f1({make_rat(1, 2), make_rat(3, 4), make_rat(3, 2)}, one - x2, prec);
                lhs = t1 + t2;
                const HpReal g14 = gam(make_rat(1, 4));
                target = g14 * g14 /
                         (HpReal::from_long(2, bits) *
                          sqrt(HpReal::from_long(2, bits) * HpReal::pi(bits)));
                break;
            }
            case ConnectionCase::SPEC_126: {
                // 3 z^(1/6) F(z) + (1-z)^(1/2) G(1-z) = 3 Gamma(1/3)^3 / (2^(7/3) pi)
                const HpComplex one = cplx_from_long(1, bits);
                const HpComplex t1 =
                    cplx_from_long(3, bits) * pow_rat(z, make_rat(1, 6)) *
                    hpg2f1({make_rat(1, 2), make_rat(1, 6), make_rat(7, 6)}, z, prec);
                const HpComplex t2 =
                    pow_rat(one - z, make_rat(1, 2)) *
                    hpg2f1({make_rat(1, 2), make_rat(5, 6), make_rat(3, 2)}, one - z, prec);
                lhs = t1 + t2;
                const HpReal g13 = gam(make_rat(1, 3));
                target = HpReal::from_long(3, bits) * g13 * g13 * g13 /
                         (HpReal::from_long(4, bits) * root(HpReal::from_long(2, bits), 3) *
                          HpReal::pi(bits));
                break;
            }
            case ConnectionCase::SPEC_333: {
                // z^(1/3) F(z) + (1-z)^(1/3) F(1-z) = Gamma(1/3)^3 / (2 sqrt(3) pi)
                const HpComplex one = cplx_from_long(1, bits);
                const HpgParams p{make_rat(1, 3), make_rat(2, 3), make_rat(4, 3)};
                lhs = pow_rat(z, make_rat(1, 3)) * hpg2f1(p, z, prec) +
                      pow_rat(one - z, make_rat(1, 3)) * hpg2f1(p, one - z, prec);
                const HpReal g13 = gam(make_rat(1, 3));
                target = g13 * g13 * g13 /
                         (HpReal::from_long(2, bits) * sqrt(HpReal::from_long(3, bits)) *
                          HpReal::pi(bits));
                break;
            }
            case ConnectionCase::CON02: {
                // (-z)^a/a F + (-z)^(-c)/c 2F1(c,1-b;1+c;1/z), z < 0
                if (zq >= 0) throw std::domain_error("CON02 needs z < 0");
                HpgParams p1{a, 1 - b, 1 + a};
                HpgParams p2{c, 1 - b, 1 + c};
                const HpComplex mz = -z;
                const HpComplex f1 = hpg2f1_ext(p1, z, prec);
                const HpComplex one = cplx_from_long(1, bits);
                const HpComplex f2 = hpg2f1(p2, one / z, prec);
                lhs = pow_rat(mz, a) * f1 / to_complex(FieldElement(Ring::Gauss, a, BigRat(0)), bits) +
                      pow_rat(mz, -c) * f2 / to_complex(FieldElement(Ring::Gauss, c, BigRat(0)), bits);
                target = gam(a) * gam(c) / gam(a + c);
                break;
            }
            case ConnectionCase::CON03: {
                // (z-1)^b/b 2F1(b,1-a;1+b;1-z) + z^(-c)/c 2F1(c,1-b;1+c;1/z), z > 1.
                // (The exponent -c is forced by the integral representation
                // c * int_z^inf t^(a-1)(t-1)^(b-1) dt of the second term.)
                if (zq <= 1) throw std::domain_error("CON03 needs z > 1");
                HpgParams p1{b, 1 - a, 1 + b};
                HpgParams p2{c, 1 - b, 1 + c};
                const HpComplex one = cplx_from_long(1, bits);
                const HpComplex f1 = hpg2f1_ext(p1, one - z, prec);
                const HpComplex f2 = hpg2f1(p2, one / z, prec);
                lhs = pow_rat(z - one, b) * f1 / to_complex(FieldElement(Ring::Gauss, b, BigRat(0)), bits) +
                      pow_rat(z, -c) * f2 / to_complex(FieldElement(Ring::Gauss, c, BigRat(0)), bits);
                target = gam(b) * gam(c) / gam(b + c);
                break;
            }
        }
        HpComplex tgt{target, HpReal(bits)};
        const HpReal err = abs(lhs - tgt) / abs(tgt);
        if (worst < err) worst = err;
    }
    return worst;
}

HpReal verify_connection(ConnectionCase which, const std::vector<BigRat>& points, long prec) {
    switch (which) {
        case ConnectionCase::SPEC_144:
            return verify_connection(which, make_rat(1, 4), make_rat(1, 2), points, prec);
        case ConnectionCase::SPEC_126:
            return verify_connection(which, make_rat(1, 6), make_rat(1, 2), points, prec);
        case ConnectionCase::SPEC_333:
            return verify_connection(which, make_rat(1, 3), make_rat(1, 3), points, prec);
        default:
            throw std::invalid_argument("verify_connection: case needs explicit parameters");
    }
}

// --- elliptic integrals by tanh-sinh quadrature -----------------------------

namespace {

// Integrand g(s) on (0,1) after the substitution x = L/s, written with the
// factor L - s = (L-1) + (1-s) split out so that z near 1 stays accurate.
HpReal quad_integrand(Family f, const HpReal& L, const HpReal& Lm1, const HpReal& s,
                      const HpReal& one_minus_s) {
    const HpReal Lms = Lm1 + one_minus_s;  // L - s
    switch (f) {
        case Family::E1:  // sqrt(L) s^(-1/2) ((L-s)(L+s))^(-1/2)
            return sqrt(L) / (sqrt(s) * sqrt(Lms * (L + s)));
        case Family::E2:  // L s^(-1/2) ((L-s)(L^2+Ls+s^2))^(-1/2)
            return L / (sqrt(s) * sqrt(Lms * (L * L + L * s + s * s)));
        case Family::E3:  // L ((L-s)(L^2+Ls+s^2))^(-2/3)
            return L / pow(Lms * (L * L + L * s + s * s),
                           HpReal::from_rat(make_rat(2, 3), L.prec()));
    }
    throw std::logic_error("quad_integrand: unreachable");
}

}  // namespace

HpReal elliptic_quadrature(Family f, const BigRat& z, long prec) {
    if (z <= 0 || z > 1) throw std::domain_error("elliptic_quadrature: need 0 < z <= 1");
    const mpfr_prec_t bits = digits_to_bits(prec + 25);
    const HpReal one = HpReal::from_long(1, bits);
    const HpReal half = HpReal::from_rat(make_rat(1, 2), bits);
    const HpReal zr = real_rat(z, bits);
    const unsigned long k = (f == Family::E1) ? 2 : 3;
    const HpReal L = root(one / zr, k);
    const HpReal Lm1 = L - one;
    // tanh-sinh on (0,1): s = 1/(1 + e^(-2u)), u = (pi/2) sinh t.
    const HpReal pi2 = HpReal::pi(bits) * half;
    const HpReal tol = pow(HpReal::from_long(10, bits), HpReal::from_long(-(prec + 8), bits));
    const double tmax = 6.5;
    auto node_sum = [&](const HpReal& h, long stride, long offset) {
        HpReal sum(bits);
        const long nmax = static_cast<long>(tmax / h.to_double());
        for (long j = -nmax; j <= nmax; ++j) {
            if (stride == 2 && ((j - offset) % 2 != 0)) continue;
            const HpReal t = HpReal::from_long(j, bits) * h;
            const HpReal u = pi2 * sinh(t);
            const HpReal e2u = exp(u * HpReal::from_long(-2, bits));
            const HpReal s = one / (one + e2u);
            const HpReal one_minus_s = e2u / (one + e2u);
            if (s.is_zero() || one_minus_s.is_zero()) continue;
            const HpReal w = pi2 * cosh(t) * half / (cosh(u) * cosh(u));
            sum = sum + w * quad_integrand(f, L, Lm1, s, one_minus_s);
        }
        return sum;
    };
    HpReal h = one;
    HpReal result = h * node_sum(h, 1, 0);
    for (int level = 1; level <= 13; ++level) {
        h = h * half;
        const HpReal odd = node_sum(h, 2, 1);
        const HpReal refined = result * half + h * odd;
        const HpReal delta = abs(refined - result);
        result = refined;
        if (level > 3 && delta < tol * abs(result)) break;
    }
    return result;
}

HpReal elliptic_series_side(Family f, const BigRat& z, long prec) {
    const mpfr_prec_t bits = digits_to_bits(prec + 15);
    const HpComplex zc{real_rat(z, bits), HpReal(bits)};
    switch (f) {
        case Family::E1: {
            const HpComplex v = hpg2f1(side_params(FuncSide::F144), zc, prec);
            return HpReal::from_long(2, bits) * root(real_rat(z, bits), 4) * v.re;
        }
        case Family::E2: {
            const HpComplex v = hpg2f1(side_params(FuncSide::F126), zc, prec);
            return HpReal::from_long(2, bits) * root(real_rat(z, bits), 6) * v.re;
        }
        case Family::E3: {
            const HpComplex v = hpg2f1(side_params(FuncSide::F333), zc, prec);
            return root(real_rat(z, bits), 3) * v.re;
        }
    }
    throw std::logic_error("elliptic_series_side: unreachable");
}

}  // namespace hpgforge
