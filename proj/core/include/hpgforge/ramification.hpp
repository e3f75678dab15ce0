#pragma once

#include "hpgforge/transformation.hpp"

namespace hpgforge {

// Branching multiplicities of a rational map over 0, 1 and infinity.
// Each fiber is a descending multiset; entries sum to the degree.
struct RamificationPattern {
    long degree = 0;
    std::vector<long> over0, over1, overInf;
};

RamificationPattern ramify(const RationalMap& phi);

// Number of distinct points above the three singular values; a valid
// transformation covering has exactly degree + 2.
long distinct_point_count(const RamificationPattern& p);

// Matches the pattern against the fixed covering table; rows are keyed by
// (source, target) exponent triples and the degree residue. Returns the
// 1-based row id, or nothing if no (or more than one) row fits.
std::optional<int> match_table1(const RamificationPattern& p, const ExpTriple& source,
                                const ExpTriple& target);

// "a*o1+b*o2 = ... = ..." with count*order terms per fiber.
std::string pattern_to_string(const RamificationPattern& p);

}  // namespace hpgforge
