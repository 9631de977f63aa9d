#pragma once

// Independent oracles for test expectations. These stay brute-force on
// purpose: they must not share a code path with the implementations they
// check.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "ehc/tournament.hpp"

namespace ehc::oracle {

inline bool subset_transitive(const Tournament& t, const std::vector<int>& X) {
    for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = 0; b < X.size(); ++b)
            for (size_t c = 0; c < X.size(); ++c) {
                if (a == b || b == c || a == c) continue;
                if (t.arc(X[a], X[b]) && t.arc(X[b], X[c]) && !t.arc(X[a], X[c])) return false;
            }
    return true;
}

// Maximum transitive subtournament by trying every vertex subset.
inline int tr_exhaustive(const Tournament& t) {
    int n = t.size();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> X;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) X.push_back(v);
        if ((int)X.size() <= best) continue;
        if (subset_transitive(t, X)) best = (int)X.size();
    }
    return best;
}

// Induced containment by trying every subset and every bijection onto it.
inline bool contains_exhaustive(const Tournament& host, const Tournament& pattern) {
    int n = host.size(), k = pattern.size();
    if (k > n) return false;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> pick(k);
    std::function<bool(int, int)> choose = [&](int start, int depth) -> bool {
        if (depth == k) {
            std::vector<int> perm(pick);
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (int a = 0; a < k && ok; ++a)
                    for (int b = 0; b < k && ok; ++b)
                        if (a != b && pattern.arc(a, b) != host.arc(perm[a], perm[b])) ok = false;
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = start; v < n; ++v) {
            pick[depth] = v;
            if (choose(v + 1, depth + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

} // namespace ehc::oracle
