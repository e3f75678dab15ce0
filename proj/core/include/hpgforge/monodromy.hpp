#pragma once

#include <string>
#include <vector>

#include "hpgforge/ring.hpp"

namespace hpgforge {

// Monodromy of the degenerate hypergeometric solutions as exact affine maps
// F -> scale * F + shift * K, with K = Gamma(a)Gamma(b)/Gamma(a+b) the
// connection constant of the case. Scales are roots of unity in Q(i)/Q(w);
// shifts are exact field elements (coefficients of K).
struct AffineMonodromy {
    FieldElement scale;
    FieldElement shift;

    friend bool operator==(const AffineMonodromy&, const AffineMonodromy&) = default;
};

// Apply `first`, then `second` (analytic continuation composes this way:
// constants pass through unchanged).
AffineMonodromy compose_after(const AffineMonodromy& second, const AffineMonodromy& first);
AffineMonodromy monodromy_inverse(const AffineMonodromy& m);
AffineMonodromy monodromy_identity(Ring r);

enum class MonodromyCase { F4, F6, F3 };  // (a,b) = (1/4,1/2), (1/6,1/2), (1/3,1/3)

// Generators: sigma0 = (e^{2 pi i a}, 0), sigma1 = (e^{2 pi i b}, 1 - e^{2 pi i b}).
AffineMonodromy sigma0(MonodromyCase c);
AffineMonodromy sigma1(MonodromyCase c);

// A word is applied right-to-left ("s0 s1" continues along sigma1 first);
// letters: '0', '1', 'O' = sigma0^{-1}, 'I' = sigma1^{-1}.
AffineMonodromy monodromy_word(MonodromyCase c, const std::string& word);

// The Pochhammer commutator sigma0^-1 sigma1^-1 sigma0 sigma1; its shift is
// (1 - e^{2 pi i a})(1 - e^{2 pi i b}).
AffineMonodromy pochhammer(MonodromyCase c);

struct MonodromyReport {
    MonodromyCase which;
    AffineMonodromy s0, s1;
    // translation words and their exact shifts in units of K, rescaled to
    // the normalization of the corresponding elliptic integral
    // (I = F for F4, I = F/3 for F6 and F3).
    std::vector<std::pair<std::string, FieldElement>> period_words;
};

MonodromyReport monodromy_group(MonodromyCase c);

// K in terms of the named Gamma constants:
//   F4: K = Gamma(1/4)^2/sqrt(2 pi) = C4
//   F6: K = 3 Gamma(1/3)^3/(2^(4/3) pi)
//   F3: K = sqrt(3) Gamma(1/3)^3/(2 pi)
// (derived from the reflection and Legendre duplication identities).
std::string monodromy_constant_description(MonodromyCase c);

}  // namespace hpgforge
