#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "hpgforge/numbers.hpp"

namespace hpgforge {

enum class Ring { Gauss, Eisenstein };

std::ostream& operator<<(std::ostream& os, Ring r);

// An element of Z[i] (a + b*i, i^2 = -1) or Z[w] (a + b*w, w^2 + w + 1 = 0).
struct RingElement {
    Ring ring = Ring::Gauss;
    BigInt a, b;

    RingElement() = default;
    RingElement(Ring r, BigInt a_, BigInt b_) : ring(r), a(std::move(a_)), b(std::move(b_)) {}
    RingElement(Ring r, long a_, long b_ = 0) : ring(r), a(a_), b(b_) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }
    bool is_unit() const;

    friend bool operator==(const RingElement& x, const RingElement& y) {
        return x.ring == y.ring && x.a == y.a && x.b == y.b;
    }
};

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);
RingElement conj(const RingElement& x);
BigInt norm(const RingElement& x);

// Exact division; throws if y does not divide x in the ring.
RingElement exact_div(const RingElement& x, const RingElement& y);
bool divides(const RingElement& y, const RingElement& x);

// gcd by Euclid with nearest-lattice-point division (both rings are norm-Euclidean).
RingElement ring_gcd(RingElement x, RingElement y);

// The unit groups: {1, i, -1, -i} and the six powers of 1+w.
std::vector<RingElement> units(Ring r);

// The unique associate in the canonical sector: Gauss a > 0, b >= 0;
// Eisenstein b >= 0 and a > b (the 60-degree cone containing 1).
RingElement canonical_rep(const RingElement& u);
bool is_canonical(const RingElement& u);
bool is_associate(const RingElement& x, const RingElement& y);

// All canonical representatives of norm exactly d, exhaustive search.
std::vector<RingElement> elements_of_norm(const BigInt& d, Ring r);

// Canonical representatives with 1 <= norm <= bound, ascending by norm.
std::vector<RingElement> canonical_elements_up_to_norm(Ring r, long bound);

// "a+b*i" / "a+b*w"; the parser also accepts forms like "2+i", "-w", "1-2i".
std::string to_string(const RingElement& x);
RingElement parse_ring_element(const std::string& s, Ring r);

std::ostream& operator<<(std::ostream& os, const RingElement& x);

// An element of Q(i) or Q(w).
struct FieldElement {
    Ring ring = Ring::Gauss;
    BigRat a, b;

    FieldElement() : a(0), b(0) {}
    FieldElement(Ring r, BigRat a_, BigRat b_) : ring(r), a(std::move(a_)), b(std::move(b_)) {}
    FieldElement(Ring r, long a_, long b_ = 0) : ring(r), a(a_), b(b_) {}
    explicit FieldElement(const RingElement& x) : ring(x.ring), a(x.a), b(x.b) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_one() const { return a == 1 && b == 0; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) {
        return x.ring == y.ring && x.a == y.a && x.b == y.b;
    }
};

FieldElement operator+(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x, const FieldElement& y);
FieldElement operator*(const FieldElement& x, const FieldElement& y);
FieldElement operator/(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x);
FieldElement conj(const FieldElement& x);
BigRat norm(const FieldElement& x);
FieldElement inverse(const FieldElement& x);

// Rounds to the nearest ring element (used by the ring Euclid).
RingElement nearest_ring_element(const FieldElement& x);

// Exact 4th/6th roots of unity as field constants.
FieldElement unit_i(Ring r);      // i   (Gauss only)
FieldElement unit_omega(Ring r);  // w   (Eisenstein only)
FieldElement field_one(Ring r);
FieldElement field_zero(Ring r);

std::string to_string(const FieldElement& x);
std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace hpgforge
