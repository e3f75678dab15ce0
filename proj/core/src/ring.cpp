#include "hpgforge/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hpgforge {

std::ostream& operator<<(std::ostream& os, Ring r) {
    return os << (r == Ring::Gauss ? "gauss" : "eisenstein");
}

static void check_same_ring(Ring x, Ring y) {
    if (x != y) throw std::invalid_argument("ring tag mismatch");
}

RingElement operator+(const RingElement& x, const RingElement& y) {
    check_same_ring(x.ring, y.ring);
    return {x.ring, x.a + y.a, x.b + y.b};
}

RingElement operator-(const RingElement& x, const RingElement& y) {
    check_same_ring(x.ring, y.ring);
    return {x.ring, x.a - y.a, x.b - y.b};
}

RingElement operator-(const RingElement& x) { return {x.ring, -x.a, -x.b}; }

RingElement operator*(const RingElement& x, const RingElement& y) {
    check_same_ring(x.ring, y.ring);
    if (x.ring == Ring::Gauss)
        return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    // (a+bw)(c+dw) with w^2 = -1-w
    return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

RingElement conj(const RingElement& x) {
    if (x.ring == Ring::Gauss) return {x.ring, x.a, -x.b};
    return {x.ring, x.a - x.b, -x.b};  // conj(a+bw) = (a-b) - b*w
}

BigInt norm(const RingElement& x) {
    if (x.ring == Ring::Gauss) return x.a * x.a + x.b * x.b;
    return x.a * x.a - x.a * x.b + x.b * x.b;
}

bool RingElement::is_unit() const { return norm(*this) == 1; }

RingElement exact_div(const RingElement& x, const RingElement& y) {
    if (y.is_zero()) throw std::domain_error("ring division by zero");
    check_same_ring(x.ring, y.ring);
    const RingElement num = x * conj(y);
    const BigInt n = norm(y);
    if (num.a % n != 0 || num.b % n != 0)
        throw std::domain_error("exact_div: not divisible in the ring");
    return {x.ring, num.a / n, num.b / n};
}

bool divides(const RingElement& y, const RingElement& x) {
    if (y.is_zero()) return x.is_zero();
    const RingElement num = x * conj(y);
    const BigInt n = norm(y);
    return num.a % n == 0 && num.b % n == 0;
}

RingElement ring_gcd(RingElement x, RingElement y) {
    check_same_ring(x.ring, y.ring);
    while (!y.is_zero()) {
        FieldElement q(Ring::Gauss, 0, 0);
        {
            FieldElement fx(x), fy(y);
            q = fx / fy;
        }
        RingElement k = nearest_ring_element(q);
        RingElement r = x - k * y;
        x = y;
        y = r;
    }
    return x;
}

std::vector<RingElement> units(Ring r) {
    if (r == Ring::Gauss)
        return {{r, 1, 0}, {r, 0, 1}, {r, -1, 0}, {r, 0, -1}};
    // powers of 1+w (a primitive 6th root of unity)
    return {{r, 1, 0}, {r, 1, 1}, {r, 0, 1}, {r, -1, 0}, {r, -1, -1}, {r, 0, -1}};
}

bool is_canonical(const RingElement& u) {
    if (u.is_zero()) return false;
    if (u.ring == Ring::Gauss) return u.a > 0 && u.b >= 0;
    return u.b >= 0 && u.a > u.b;
}

RingElement canonical_rep(const RingElement& u) {
    if (u.is_zero()) throw std::domain_error("canonical_rep of zero");
    for (const RingElement& e : units(u.ring)) {
        RingElement v = u * e;
        if (is_canonical(v)) return v;
    }
    throw std::logic_error("canonical_rep: no associate in the canonical sector");
}

bool is_associate(const RingElement& x, const RingElement& y) {
    if (x.ring != y.ring) return false;
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return canonical_rep(x) == canonical_rep(y);
}

std::vector<RingElement> elements_of_norm(const BigInt& d, Ring r) {
    if (d < 1) throw std::domain_error("elements_of_norm: d must be >= 1");
    // |a|,|b| <= ceil(sqrt(d))+1 suffices for Gauss; the Eisenstein norm form
    // allows coordinates up to 2*sqrt(d/3), so take the larger bound.
    BigInt bound = int_sqrt(d) + 2;
    if (r == Ring::Eisenstein) {
        BigInt eis = int_sqrt((4 * d) / 3) + 2;
        bound = std::max(bound, eis);
    }
    std::vector<RingElement> out;
    const long B = to_long(bound);
    for (long b = 0; b <= B; ++b) {
        for (long a = -B; a <= B; ++a) {
            RingElement u(r, a, b);
            if (norm(u) == d && is_canonical(u)) out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end(), [](const RingElement& x, const RingElement& y) {
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    });
    return out;
}

std::vector<RingElement> canonical_elements_up_to_norm(Ring r, long bound) {
    std::vector<RingElement> out;
    for (long d = 1; d <= bound; ++d) {
        auto v = elements_of_norm(BigInt(d), r);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::string to_string(const RingElement& x) {
    std::ostringstream os;
    os << x.a.get_str();
    os << (x.b >= 0 ? "+" : "-");
    BigInt ab = abs(x.b);
    os << ab.get_str() << "*" << (x.ring == Ring::Gauss ? "i" : "w");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << to_string(x); }

// --- parsing -----------------------------------------------------------

namespace {

struct ElemParser {
    const std::string& s;
    size_t pos = 0;

    explicit ElemParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

}  // namespace

RingElement parse_ring_element(const std::string& s, Ring r) {
    const char imag = (r == Ring::Gauss) ? 'i' : 'w';
    ElemParser p(s);
    BigInt a = 0, b = 0;
    bool any = false;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        while (c == '+' || c == '-') {
            if (c == '-') sign = -sign;
            ++p.pos;
            c = p.peek();
        }
        std::string digits;
        while (p.pos < p.s.size() && std::isdigit(static_cast<unsigned char>(p.s[p.pos]))) {
            digits.push_back(p.s[p.pos]);
            ++p.pos;
        }
        c = p.peek();
        if (c == '*') {
            ++p.pos;
            c = p.peek();
        }
        if (c == imag || c == 'I' || (r == Ring::Eisenstein && c == 'W')) {
            ++p.pos;
            BigInt coef = digits.empty() ? BigInt(1) : BigInt(digits, 10);
            b += sign * coef;
        } else if (!digits.empty()) {
            a += sign * BigInt(digits, 10);
        } else {
            throw std::invalid_argument("cannot parse ring element: '" + s + "'");
        }
        any = true;
    }
    if (!any) throw std::invalid_argument("cannot parse ring element: '" + s + "'");
    return {r, a, b};
}

// --- field --------------------------------------------------------------

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    check_same_ring(x.ring, y.ring);
    return {x.ring, x.a + y.a, x.b + y.b};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    check_same_ring(x.ring, y.ring);
    return {x.ring, x.a - y.a, x.b - y.b};
}

FieldElement operator-(const FieldElement& x) { return {x.ring, -x.a, -x.b}; }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    check_same_ring(x.ring, y.ring);
    if (x.ring == Ring::Gauss)
        return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
    return {x.ring, x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
}

FieldElement conj(const FieldElement& x) {
    if (x.ring == Ring::Gauss) return {x.ring, x.a, -x.b};
    return {x.ring, x.a - x.b, -x.b};
}

BigRat norm(const FieldElement& x) {
    if (x.ring == Ring::Gauss) return x.a * x.a + x.b * x.b;
    return x.a * x.a - x.a * x.b + x.b * x.b;
}

FieldElement inverse(const FieldElement& x) {
    if (x.is_zero()) throw std::domain_error("field division by zero");
    const BigRat n = norm(x);
    FieldElement c = conj(x);
    return {x.ring, c.a / n, c.b / n};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) { return x * inverse(y); }

RingElement nearest_ring_element(const FieldElement& x) {
    // Rounding both coordinates is enough: in either ring the residual has
    // norm at most 3/4 < 1, which is all that the Euclid loop needs.
    return {x.ring, rat_round(x.a), rat_round(x.b)};
}

FieldElement unit_i(Ring r) {
    if (r != Ring::Gauss) throw std::invalid_argument("unit_i: Gauss ring only");
    return {r, 0, 1};
}

FieldElement unit_omega(Ring r) {
    if (r != Ring::Eisenstein) throw std::invalid_argument("unit_omega: Eisenstein ring only");
    return {r, 0, 1};
}

FieldElement field_one(Ring r) { return {r, 1, 0}; }
FieldElement field_zero(Ring r) { return {r, 0, 0}; }

std::string to_string(const FieldElement& x) {
    std::ostringstream os;
    os << rat_to_string(x.a);
    if (x.b >= 0) os << "+";
    os << rat_to_string(x.b) << "*" << (x.ring == Ring::Gauss ? "i" : "w");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << to_string(x); }

}  // namespace hpgforge
