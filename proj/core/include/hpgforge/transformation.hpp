#pragma once

#include "hpgforge/triple.hpp"

namespace hpgforge {

// The hypergeometric function attached to each side of an identity.
enum class FuncSide { F144, F126, F333, FHyp };

std::ostream& operator<<(std::ostream& os, FuncSide s);

struct HpgParams {
    BigRat a, b, c;
};

// Local exponent differences at z = 0, 1, infinity.
struct ExpTriple {
    BigRat at0, at1, atInf;
    friend bool operator==(const ExpTriple&, const ExpTriple&) = default;
};

HpgParams side_params(FuncSide s);
ExpTriple side_exponents(FuncSide s);
FuncSide family_side(Family f);

// theta(z) = prod base_k(z)^exp_k with every base normalized to base(0) = 1,
// so theta(0) = 1 (principal branches near 0).
struct RadicalTerm {
    RationalMap base;
    BigRat exp;
};

struct RadicalFactor {
    std::vector<RadicalTerm> terms;
};

RadicalFactor radical_one(Ring r);
RadicalFactor radical_mul(const RadicalFactor& a, const RadicalFactor& b);
// Exact algebraic equality: compares theta1^N = theta2^N for N = lcm of
// exponent denominators (both sides are 1 at z = 0).
bool radical_equal(const RadicalFactor& a, const RadicalFactor& b);

struct Transformation {
    FuncSide source = FuncSide::F144;  // left-hand function
    FuncSide target = FuncSide::F144;  // right-hand function
    RationalMap phi;
    RadicalFactor theta;
    std::optional<RingElement> u;
};

// Pull-back data of a canonical triple; degree(phi) = norm(u).
Transformation to_transformation(const Triple& t);

enum class CrossKind { E3_TO_E2, HYPER_TO_E2 };

// The fixed degree-2 transformations z^2/(4(z-1)) and -4z/(z-1)^2.
Transformation quadratic_cross(CrossKind kind);

// phi = outer.phi o inner.phi, theta = (outer.theta o inner.phi) * inner.theta.
// Requires inner.target == outer.source.
Transformation compose_transformations(const Transformation& outer,
                                       const Transformation& inner);

// Exact check of R^2 = (1-z) Q^3 - z^2 P^6.
bool verify_cross_identity(const Poly& P, const Poly& Q, const Poly& R);

// Map-level form of the same identity for a composed degree 6n+2 map
// phi = z^2 P^6 / ((1-z) Q^3): denominator is (z-1) times a perfect cube,
// numerator is z^2 times a perfect sixth power, and num(1 - phi) is a
// perfect square, all up to constants.
bool cross_identity_map_level(const RationalMap& phi);

bool transformation_equal(const Transformation& a, const Transformation& b);

}  // namespace hpgforge
