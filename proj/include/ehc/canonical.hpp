#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ehc/tournament.hpp"

namespace ehc {

constexpr int kDefaultCanonBound = 8;

// Lexicographically minimal TRN bitstring over all n! relabelings.
// Equal strings <=> isomorphic. Bounded: n <= bound.
std::string canonical_form(const Tournament& t, int bound = kDefaultCanonBound);

// One representative per isomorphism class, sorted by canonical bitstring.
// Exhaustive mode only; n <= 7.
std::vector<Tournament> enumerate_tournaments(int n);

bool is_isomorphic(const Tournament& a, const Tournament& b);

} // namespace ehc
