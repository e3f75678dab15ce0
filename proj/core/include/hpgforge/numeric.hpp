#pragma once

#include "hpgforge/hp.hpp"
#include "hpgforge/transformation.hpp"

namespace hpgforge {

// Numeric embedding of a field constant: i -> sqrt(-1), w -> (-1+i*sqrt(3))/2.
HpComplex to_complex(const FieldElement& v, mpfr_prec_t bits);
HpComplex eval_hp(const Poly& p, const HpComplex& z);
HpComplex eval_hp(const RationalMap& f, const HpComplex& z);
// Principal-branch product of base^exp terms.
HpComplex eval_hp(const RadicalFactor& t, const HpComplex& z);

// Gauss 2F1 power series; requires |z| <= 0.95. `prec` is the target number
// of decimal digits (work happens at prec+15 digits).
HpComplex hpg2f1(const HpgParams& p, const HpComplex& z, long prec);

// Series plus the Pfaff reflection z -> z/(z-1) for real z < -0.95.
HpComplex hpg2f1_ext(const HpgParams& p, const HpComplex& z, long prec);

// Gamma at positive rationals via Spouge's expansion (independent of the
// 2F1 machinery above).
HpReal gamma_rat(const BigRat& s, long prec);

enum class GammaTag { G14, G13, G12, G16, PI, SQRT2PI };
HpReal gamma_const(GammaTag tag, long prec);

// Max relative error of lhs = theta * rhs(phi) over the points.
HpReal verify_identity(const Transformation& t, const std::vector<BigRat>& points, long prec);

// Points 0.001j (j = 1..count), halved together until every point yields
// |phi(z)| < 1/2 and all radical bases stay in the right half-plane.
std::vector<BigRat> branch_safe_points(const Transformation& t, int count, long prec);

enum class ConnectionCase { CON01, CON02, CON03, SPEC_144, SPEC_126, SPEC_333 };

// Max relative error of the two-term connection relation against its
// Gamma-constant; empty point list uses built-in defaults per case.
// CON01 takes explicit (a, b) parameters.
HpReal verify_connection(ConnectionCase which, const BigRat& a, const BigRat& b,
                         const std::vector<BigRat>& points, long prec);
HpReal verify_connection(ConnectionCase which, const std::vector<BigRat>& points, long prec);

// The elliptic integral of the family from the z-dependent lower bound to
// infinity, by tanh-sinh quadrature after mapping to (0,1]. Requires
// 0 < z <= 1.
HpReal elliptic_quadrature(Family f, const BigRat& z, long prec);

// Series-side value that the quadrature must reproduce:
//   E1: 2 z^(1/4) 2F1(1/2,1/4;5/4;z), E2: 2 z^(1/6) 2F1(1/2,1/6;7/6;z),
//   E3: z^(1/3) 2F1(1/3,2/3;4/3;z).
HpReal elliptic_series_side(Family f, const BigRat& z, long prec);

}  // namespace hpgforge
