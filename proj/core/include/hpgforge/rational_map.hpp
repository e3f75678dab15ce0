#pragma once

#include "hpgforge/poly.hpp"

namespace hpgforge {

// Reduced rational function num/den with gcd(num, den) = 1 and den monic.
// The representation is canonical, so operator== is structural equality.
class RationalMap {
  public:
    explicit RationalMap(Ring r = Ring::Gauss)
        : num_(Poly(r)), den_(Poly::constant(r, 1)) {}
    RationalMap(Poly num, Poly den);
    explicit RationalMap(const Poly& p) : RationalMap(p, Poly::constant(p.ring(), 1)) {}

    static RationalMap constant(const FieldElement& v) {
        return RationalMap(Poly::constant(v));
    }
    static RationalMap z(Ring r) { return RationalMap(Poly::z(r)); }

    Ring ring() const { return num_.ring(); }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

    // Degree as a covering map of P^1.
    long degree() const { return std::max(num_.degree(), den_.degree()); }

    friend bool operator==(const RationalMap& f, const RationalMap& g) {
        return f.num_ == g.num_ && f.den_ == g.den_;
    }

  private:
    Poly num_, den_;
};

RationalMap operator+(const RationalMap& f, const RationalMap& g);
RationalMap operator-(const RationalMap& f, const RationalMap& g);
RationalMap operator*(const RationalMap& f, const RationalMap& g);
RationalMap operator/(const RationalMap& f, const RationalMap& g);
RationalMap operator-(const RationalMap& f);
RationalMap inverse(const RationalMap& f);
RationalMap pow(const RationalMap& f, long e);

// Evaluation; throws on a pole.
FieldElement eval(const RationalMap& f, const FieldElement& x);

// p(f) for a polynomial p.
RationalMap compose(const Poly& p, const RationalMap& f);
// f(g) for rational f.
RationalMap compose(const RationalMap& f, const RationalMap& g);

// Interprets f as G(x^k): requires every exponent present in num/den to be
// divisible by k (after reduction); returns G(s). Throws otherwise.
RationalMap compress_power(const RationalMap& f, long k);

// f(1/z) as a rational map of z.
RationalMap subst_reciprocal(const RationalMap& f);

// Limit at infinity: {0 if deg num < deg den, lead ratio if equal}; throws
// when the limit is infinite.
FieldElement limit_at_infinity(const RationalMap& f);

std::string to_string(const RationalMap& f, const std::string& var = "z");
std::ostream& operator<<(std::ostream& os, const RationalMap& f);

}  // namespace hpgforge
