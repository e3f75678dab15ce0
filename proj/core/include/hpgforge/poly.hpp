#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "hpgforge/ring.hpp"

namespace hpgforge {

// Univariate polynomial over Q(i) or Q(w), coefficients ascending by degree,
// trailing zeros stripped. The zero polynomial has an empty coefficient list
// and degree() == kZeroDeg.
class Poly {
  public:
    static constexpr long kZeroDeg = -1;

    explicit Poly(Ring r = Ring::Gauss) : ring_(r) {}
    Poly(Ring r, std::vector<FieldElement> coeffs) : ring_(r), c_(std::move(coeffs)) { strip(); }

    static Poly constant(const FieldElement& v) { return Poly(v.ring, {v}); }
    static Poly constant(Ring r, long v) { return Poly(r, {FieldElement(r, v)}); }
    // c0 + c1 z + ... given as longs on the rational part (test convenience)
    static Poly from_ints(Ring r, const std::vector<long>& re);
    static Poly z(Ring r) { return Poly(r, {FieldElement(r, 0), FieldElement(r, 1)}); }
    static Poly one_minus_z(Ring r) { return Poly(r, {FieldElement(r, 1), FieldElement(r, -1)}); }

    Ring ring() const { return ring_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement coeff(long k) const {
        if (k < 0 || k > degree()) return field_zero(ring_);
        return c_[static_cast<size_t>(k)];
    }
    FieldElement lead() const {
        if (is_zero()) throw std::domain_error("lead of zero polynomial");
        return c_.back();
    }
    FieldElement at_zero() const { return coeff(0); }

    bool is_one() const { return degree() == 0 && c_[0].is_one(); }
    bool is_monic() const { return !is_zero() && lead().is_one(); }

    friend bool operator==(const Poly& p, const Poly& q) {
        return p.ring_ == q.ring_ && p.c_ == q.c_;
    }

  private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    Ring ring_;
    std::vector<FieldElement> c_;
};

Poly operator+(const Poly& p, const Poly& q);
Poly operator-(const Poly& p, const Poly& q);
Poly operator*(const Poly& p, const Poly& q);
Poly operator-(const Poly& p);
Poly operator*(const FieldElement& s, const Poly& p);

Poly pow(const Poly& p, unsigned long e);
Poly derivative(const Poly& p);
FieldElement eval(const Poly& p, const FieldElement& x);
Poly compose(const Poly& p, const Poly& q);
Poly monic(const Poly& p);
Poly scale(const Poly& p, const FieldElement& s);  // p / s

// Quotient/remainder over the field; exact_div throws when the remainder
// is nonzero (a nonzero remainder signals a broken identity upstream).
std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);
Poly exact_div(const Poly& p, const Poly& q);
bool divides(const Poly& q, const Poly& p);

// Monic gcd. Internally runs a primitive-PRS over the ring of integers of
// the coefficient field to keep intermediate growth tame.
Poly gcd(const Poly& p, const Poly& q);

// Yun's squarefree decomposition: pairwise coprime squarefree factors with
// multiplicities; the product of factor^mult equals p up to a constant.
std::vector<std::pair<Poly, int>> squarefree_multiplicities(const Poly& p);

// Largest monic h with h^2 | p.
Poly square_part(const Poly& p);

// Exact square/cube root with the constant term anchored to `anchor`
// (so the caller fixes the branch). Throws if p is not an exact power.
Poly poly_sqrt(const Poly& p, const FieldElement& anchor);
Poly poly_cbrt(const Poly& p, const FieldElement& anchor);

// z^n * p(1/z) for n >= deg p.
Poly reverse(const Poly& p, long n);

std::string to_string(const Poly& p, const std::string& var = "z");
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace hpgforge
