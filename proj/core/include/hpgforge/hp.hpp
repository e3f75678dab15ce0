#pragma once

#include <mpfr.h>

#include <string>

#include "hpgforge/numbers.hpp"

namespace hpgforge {

// Thin RAII wrapper over mpfr_t. Precision travels with the value; binary
// operations compute at the larger operand precision.
class HpReal {
  public:
    explicit HpReal(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    HpReal(const HpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    HpReal(HpReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    HpReal& operator=(const HpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    HpReal& operator=(HpReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~HpReal() { mpfr_clear(v_); }

    static HpReal from_long(long x, mpfr_prec_t bits);
    static HpReal from_rat(const BigRat& q, mpfr_prec_t bits);
    static HpReal pi(mpfr_prec_t bits);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(size_t digits = 30) const;

    friend HpReal operator+(const HpReal& a, const HpReal& b);
    friend HpReal operator-(const HpReal& a, const HpReal& b);
    friend HpReal operator*(const HpReal& a, const HpReal& b);
    friend HpReal operator/(const HpReal& a, const HpReal& b);
    friend HpReal operator-(const HpReal& a);
    friend bool operator<(const HpReal& a, const HpReal& b) {
        return mpfr_cmp(a.v_, b.v_) < 0;
    }

  private:
    mpfr_t v_;
};

HpReal sqrt(const HpReal& a);
HpReal exp(const HpReal& a);
HpReal log(const HpReal& a);
HpReal sin(const HpReal& a);
HpReal cos(const HpReal& a);
HpReal cosh(const HpReal& a);
HpReal sinh(const HpReal& a);
HpReal tanh(const HpReal& a);
HpReal atan2(const HpReal& y, const HpReal& x);
HpReal abs(const HpReal& a);
HpReal pow(const HpReal& a, const HpReal& b);  // a > 0
HpReal root(const HpReal& a, unsigned long k);

struct HpComplex {
    HpReal re, im;

    explicit HpComplex(mpfr_prec_t bits = 128) : re(bits), im(bits) {}
    HpComplex(HpReal r, HpReal i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::string to_string(size_t digits = 30) const;
};

HpComplex operator+(const HpComplex& a, const HpComplex& b);
HpComplex operator-(const HpComplex& a, const HpComplex& b);
HpComplex operator*(const HpComplex& a, const HpComplex& b);
HpComplex operator/(const HpComplex& a, const HpComplex& b);
HpComplex operator-(const HpComplex& a);
HpReal abs(const HpComplex& a);
HpComplex log(const HpComplex& a);   // principal branch
HpComplex exp(const HpComplex& a);
// principal-branch a^(p/q); requires a != 0
HpComplex pow_rat(const HpComplex& a, const BigRat& e);

mpfr_prec_t digits_to_bits(long digits);

}  // namespace hpgforge
