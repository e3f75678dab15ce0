#pragma once

#include <map>
#include <optional>

#include "hpgforge/rational_map.hpp"

namespace hpgforge {

// The three curve families, identified by local exponent differences:
//   E1 = (1/2,1/4,1/4) over Z[i], E2 = (1/2,1/3,1/6) over Z[w],
//   E3 = (1/3,1/3,1/3) over Z[w].
enum class Family { E1, E2, E3 };

Ring family_ring(Family f);
std::ostream& operator<<(std::ostream& os, Family f);

// Degree classes; the class fixes the defining identity and the degree table.
enum class DegreeClass {
    C4N1,  // E1, d = 4n+1 : (1-z) R^2 = Q^4 - z P^4,          deg (n, n, 2n)
    C4N2,  // E1, d = 4n+2 : R^2 = (1-z)^2 Q^4 - z P^4,        deg (n, n, 2n+1)
    C4N,   // E1, d = 4n   : R^2 = Q^4 - z (1-z)^2 P^4,        deg (n-1, n, 2n)
    ODD1,  // E2, d = 6n+1 : (1-z) R^2 = Q^3 - z P^6,          deg (n, 2n, 3n)
    ODD3,  // E2, d = 6n+3 : same identity,                    deg (n, 2n+1, 3n+1)
    EVEN4, // E2, d = 6n+4 : R^2 = Q^3 - z (1-z)^3 P^6,        deg (n, 2n+1, 3n+2)
    EVEN0, // E2, d = 6n   : same identity,                    deg (n-1, 2n, 3n)
    C3N1,  // E3, d = 3n+1 : z P^3 + (1-z) R^3 = Q^3,          deg (n, n, n)
    C3N,   // E3, d = 3n   : z (z-1) P^3 = Q^3 + R^3,          deg (n-1, n, n)
};

std::ostream& operator<<(std::ostream& os, DegreeClass c);

// Class of the canonical triple for covering degree d.
DegreeClass class_of(Family f, const BigInt& d);

// Structural form of an E3 isogeny: F1 = (X mu(X^3), Y nu(X^3)),
// F2 = coordinates swapped, F3 = (X^2 Q/(Y P), X^2 R/(Y P)).
enum class E3Form { None, F1, F2, F3 };

E3Form e3_form_of(const RingElement& u);  // by (a+b) mod 3 = 1, 2, 0

struct Triple {
    Family family = Family::E1;
    RingElement u;
    DegreeClass cls = DegreeClass::C4N1;  // representation class
    E3Form form = E3Form::None;           // E3 only
    Poly P, Q, R;
};

// Expected degrees (degP, degQ, degR) of the canonical triple of class c
// for covering degree d.
struct DegreeTableRow {
    long p, q, r;
};
DegreeTableRow expected_degrees(DegreeClass c, const BigInt& d);

// The defining polynomial identity of the stored class, checked exactly.
bool identity_holds(const Triple& t);

// identity + degree table + normalization ((u,1,1) at z=0 for E1/E2;
// Q(0)=1 plus the form-specific P anchor for E3).
bool verify_triple(const Triple& t);

// Triples of the units: ({eps},1,1).
Triple unit_triple(Family f, const RingElement& eps);

// Addition of triples along the isogeny addition law. Throws when
// u1 + u2 = 0; t + t routes through duplicate().
Triple add_triples(const Triple& t1, const Triple& t2);

// (P,Q,R) -> (eps P, Q, R) for a unit eps (E3: coordinate automorphism).
Triple unit_action(const Triple& t, const RingElement& eps);

// Doubling, via the printed duplication formulas (E1/E2) or the tangent
// law (E3).
Triple duplicate(const Triple& t);

// E2 only: odd-class (P,Q,R) -> ((1-w)PQ, Q^3-4zP^6, (Q^3+8zP^6)R).
Triple mul_one_minus_omega(const Triple& t);

// Representation changes that decorate/strip (1-z) factors:
//   E1: C4N <-> C4N2 as ((1-z)P, Q, (1-z)R)
//   E2: EVEN* <-> ODD* as ((1-z)P, (1-z)Q, (1-z)R)
Triple class_convert(const Triple& t, DegreeClass target);

// Reusable memo for batch generation (the walk shares sub-triples).
struct TripleCache {
    std::map<std::tuple<int, long, long>, Triple> memo;
};

// The canonical triple indexed by canonical_rep(u), built by the lattice
// walk over unit steps.
Triple generate(Family f, const RingElement& u);
Triple generate(Family f, const RingElement& u, TripleCache& cache);
Triple e3_generate(const RingElement& u);

// The triple of u itself (generate at the canonical associate, then the
// unit action back to u).
Triple triple_for_element(Family f, const RingElement& u);

std::ostream& operator<<(std::ostream& os, const Triple& t);

}  // namespace hpgforge
