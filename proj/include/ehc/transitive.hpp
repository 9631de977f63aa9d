#pragma once

#include <cstdint>
#include <vector>

#include "ehc/tournament.hpp"

namespace ehc {

struct TrResult {
    int size = 0;
    std::vector<int> witness; // a transitive ordering of a maximum set
};

// Largest transitive subtournament via out-neighbourhood recursion with
// full-subset memoization: tr(S) = 1 + max_{v in S} tr(S & out(v)).
// Exponential; desk scale only (n <= 22).
TrResult tr(const Tournament& t);
int tr_size(const Tournament& t);

// dp over every vertex subset; dp[mask] = tr of the induced subtournament.
std::vector<std::uint8_t> tr_all_subsets(const Tournament& t);

} // namespace ehc
