#pragma once

#include <array>

#include "hpgforge/transformation.hpp"

namespace hpgforge {

enum class CurveId { E1, E2, E3 };  // y^2=x^3-x, y^2=x^3-1, X^3+Y^3=1

Ring curve_ring(CurveId c);
Family curve_family(CurveId c);
std::ostream& operator<<(std::ostream& os, CurveId c);

// Function-field element. E1/E2: comp[0] + comp[1]*y reduced by the curve
// equation (comp[2] unused); E3: comp[0] + comp[1]*Y + comp[2]*Y^2 reduced
// by Y^3 = 1 - X^3. Coefficients are rational functions of x (resp. X).
struct FuncElem {
    CurveId curve = CurveId::E1;
    std::array<RationalMap, 3> comp{RationalMap(Ring::Gauss), RationalMap(Ring::Gauss),
                                    RationalMap(Ring::Gauss)};

    bool is_zero() const {
        return comp[0].is_zero() && comp[1].is_zero() && comp[2].is_zero();
    }
    friend bool operator==(const FuncElem& a, const FuncElem& b) {
        return a.curve == b.curve && a.comp == b.comp;
    }
};

FuncElem ff_zero(CurveId c);
FuncElem ff_const(CurveId c, const FieldElement& v);
FuncElem ff_x(CurveId c);  // the coordinate x (E3: X)
FuncElem ff_y(CurveId c);  // the coordinate y (E3: Y)

FuncElem operator+(const FuncElem& a, const FuncElem& b);
FuncElem operator-(const FuncElem& a, const FuncElem& b);
FuncElem operator*(const FuncElem& a, const FuncElem& b);
FuncElem operator/(const FuncElem& a, const FuncElem& b);
FuncElem operator-(const FuncElem& a);

// An isogeny endomorphism as a pair of coordinate functions, with an
// explicit marker for the zero isogeny (constant origin).
struct IsogenyMap {
    CurveId curve = CurveId::E1;
    RingElement u;
    FuncElem X, Y;
    bool origin = false;
};

// Group law on coordinate functions: chord rule with the tangent fallback,
// returning the origin marker when p2 = -p1.
IsogenyMap point_add(const IsogenyMap& p1, const IsogenyMap& p2);

// Reusable memo for batch computations.
struct IsogenyCache {
    std::map<std::tuple<int, long, long>, IsogenyMap> memo;
};

// The isogeny of u, built by the Euclidean lattice walk from the identity
// map and the unit automorphisms.
IsogenyMap isogeny(CurveId c, const RingElement& u);
IsogenyMap isogeny(CurveId c, const RingElement& u, IsogenyCache& cache);

// Exact check that the image satisfies the curve equation.
bool curve_relation_holds(const IsogenyMap& m);

// outer o inner as maps; the resulting index is outer.u * inner.u.
IsogenyMap compose_isogenies(const IsogenyMap& outer, const IsogenyMap& inner);

// Structural form of the x-coordinate map: E1: x mu(x^2); E2: x mu(x^3);
// E3: one of the three forms. mu0 is the limit of mu at infinity
// (1/u^2 for E1/E2, +-1/u for E3).
struct Decomposition {
    E3Form form = E3Form::None;
    RationalMap mu;
    FieldElement mu0;
};
Decomposition structural_decompose(const IsogenyMap& m);

// The pull-back argument map z -> phi(z); degree equals norm(u).
RationalMap oracle_pullback(CurveId c, const RingElement& u);
RationalMap oracle_pullback(CurveId c, const RingElement& u, IsogenyCache& cache);

}  // namespace hpgforge
