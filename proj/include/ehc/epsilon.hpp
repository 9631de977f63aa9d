#pragma once

#include "ehc/rational.hpp"
#include "ehc/tournament.hpp"

namespace ehc {

// Compares a^p vs n^e in exact integer arithmetic (no floating point).
// Returns -1, 0, +1.
int pow_compare(unsigned a, unsigned p, unsigned n, unsigned e);

// tr(T) < |T|^eps while every proper induced subtournament S satisfies
// tr(S) >= |S|^eps. eps must be a rational e/p in (0, 1]; size comparisons
// a < n^(e/p) are evaluated as a^p < n^e exactly.
bool is_epsilon_critical(const Tournament& t, const Rational& eps, int n_cap = 16);

} // namespace ehc
