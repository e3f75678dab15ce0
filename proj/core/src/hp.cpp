#include "hpgforge/hp.hpp"

#include <cmath>
#include <sstream>

namespace hpgforge {

mpfr_prec_t digits_to_bits(long digits) {
    return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873623 + 16);
}

HpReal HpReal::from_long(long x, mpfr_prec_t bits) {
    HpReal r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

HpReal HpReal::from_rat(const BigRat& q, mpfr_prec_t bits) {
    HpReal r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

HpReal HpReal::pi(mpfr_prec_t bits) {
    HpReal r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string HpReal::to_string(size_t digits) const {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%%.%zuRg", digits);
    char* out = nullptr;
    if (mpfr_asprintf(&out, buf, v_) < 0) return "<err>";
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

#define HP_BINOP(op, fn)                                                  \
    HpReal operator op(const HpReal& a, const HpReal& b) {                \
        HpReal r(std::max(a.prec(), b.prec()));                           \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                         \
        return r;                                                         \
    }

HP_BINOP(+, mpfr_add)
HP_BINOP(-, mpfr_sub)
HP_BINOP(*, mpfr_mul)
HP_BINOP(/, mpfr_div)
#undef HP_BINOP

HpReal operator-(const HpReal& a) {
    HpReal r(a.prec());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}

#define HP_UNOP(name, fn)                       \
    HpReal name(const HpReal& a) {              \
        HpReal r(a.prec());                     \
        fn(r.raw(), a.raw(), MPFR_RNDN);        \
        return r;                               \
    }

HP_UNOP(sqrt, mpfr_sqrt)
HP_UNOP(exp, mpfr_exp)
HP_UNOP(log, mpfr_log)
HP_UNOP(sin, mpfr_sin)
HP_UNOP(cos, mpfr_cos)
HP_UNOP(cosh, mpfr_cosh)
HP_UNOP(sinh, mpfr_sinh)
HP_UNOP(tanh, mpfr_tanh)
HP_UNOP(abs, mpfr_abs)
#undef HP_UNOP

HpReal atan2(const HpReal& y, const HpReal& x) {
    HpReal r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

HpReal pow(const HpReal& a, const HpReal& b) {
    HpReal r(std::max(a.prec(), b.prec()));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

HpReal root(const HpReal& a, unsigned long k) {
    HpReal r(a.prec());
#if MPFR_VERSION_MAJOR >= 4
    mpfr_rootn_ui(r.raw(), a.raw(), k, MPFR_RNDN);
#else
    mpfr_root(r.raw(), a.raw(), k, MPFR_RNDN);
#endif
    return r;
}

std::string HpComplex::to_string(size_t digits) const {
    std::ostringstream os;
    os << re.to_string(digits) << (im.sign() < 0 ? " - " : " + ")
       << abs(im).to_string(digits) << "*I";
    return os.str();
}

HpComplex operator+(const HpComplex& a, const HpComplex& b) { return {a.re + b.re, a.im + b.im}; }
HpComplex operator-(const HpComplex& a, const HpComplex& b) { return {a.re - b.re, a.im - b.im}; }

HpComplex operator*(const HpComplex& a, const HpComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HpComplex operator/(const HpComplex& a, const HpComplex& b) {
    const HpReal n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

HpComplex operator-(const HpComplex& a) { return {-a.re, -a.im}; }

HpReal abs(const HpComplex& a) {
    HpReal r(a.prec());
    mpfr_hypot(r.raw(), a.re.raw(), a.im.raw(), MPFR_RNDN);
    return r;
}

HpComplex log(const HpComplex& a) { return {log(abs(a)), atan2(a.im, a.re)}; }

HpComplex exp(const HpComplex& a) {
    const HpReal m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
}

HpComplex pow_rat(const HpComplex& a, const BigRat& e) {
    if (a.is_zero()) throw std::domain_error("pow_rat: zero base");
    if (e == 0) {
        HpComplex one(a.prec());
        mpfr_set_si(one.re.raw(), 1, MPFR_RNDN);
        return one;
    }
    const HpReal ex = HpReal::from_rat(e, a.prec());
    const HpComplex l = log(a);
    return exp(HpComplex{ex * l.re, ex * l.im});
}

}  // namespace hpgforge
