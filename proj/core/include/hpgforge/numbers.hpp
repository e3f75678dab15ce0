#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hpgforge {

// Exact arbitrary-precision integers and rationals. Rationals are kept in
// lowest terms with a positive denominator at all times.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(long num, long den = 1) {
    return make_rat(BigInt(num), BigInt(den));
}

// Parses "p", "p/q" or decimal strings of either part.
inline BigRat rat_from_string(const std::string& s) {
    BigRat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const BigRat& q) { return q.get_str(); }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline long to_long(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long");
    return n.get_si();
}

inline BigInt rat_floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Nearest integer, ties toward +infinity.
inline BigInt rat_round(const BigRat& q) {
    return rat_floor(q + make_rat(1, 2));
}

inline BigInt int_sqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("int_sqrt of negative");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const BigInt& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline BigRat rat_pow(const BigRat& q, long e) {
    if (e == 0) return BigRat(1);
    BigRat base = e < 0 ? BigRat(1) / q : q;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    BigRat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

}  // namespace hpgforge
