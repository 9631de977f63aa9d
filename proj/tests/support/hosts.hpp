#pragma once

// Purpose-built hosts with a planted pattern copy, one vertex per label
// class, used by embedding tests and the acceptance suite.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ehc/digraph.hpp"
#include "ehc/mutants.hpp"
#include "ehc/smooth.hpp"
#include "ehc/tournament.hpp"

namespace ehc::testhost {

struct PlantedHost {
    Tournament host;
    SmoothStructure chi;
    std::vector<int> planted; // pattern position -> host vertex
};

// Blocks laid out left to right as consecutive vertex ranges, all arcs
// forward, then the pattern's arcs written over the planted vertices (one per
// label class, the first vertex of each class).
inline PlantedHost build_planted_host(const Digraph& pattern, const std::vector<int>& leaf_flags,
                                      const std::vector<int>& block_sizes) {
    CompressedFlags cf = compress_flags(leaf_flags);
    if (block_sizes.size() != cf.w.size())
        throw std::invalid_argument("build_planted_host: one size per block required");

    PlantedHost out;
    out.chi.w = cf.w;
    out.chi.delta = cf.delta;
    int n = 0;
    std::vector<std::pair<int, int>> ranges;
    for (size_t i = 0; i < cf.w.size(); ++i) {
        ranges.push_back({n, n + block_sizes[i]});
        std::vector<int> S(block_sizes[i]);
        std::iota(S.begin(), S.end(), n);
        out.chi.sets.push_back(S);
        if (cf.w[i] == 1) out.chi.transitive_orders[(int)i] = S;
        n += block_sizes[i];
    }
    out.chi.c = Rational(1, 2L * n);
    out.chi.lambda = Rational(1, 4);

    Tournament host(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) host.set_arc(u, v);

    // planted vertex per label class
    for (size_t i = 0; i < cf.w.size(); ++i) {
        auto [lo, hi] = ranges[i];
        if (cf.w[i] == 0) {
            out.planted.push_back(lo);
        } else {
            int d = cf.delta.at((int)i);
            int width = (hi - lo) / d;
            if (width == 0) throw std::invalid_argument("build_planted_host: block too small");
            for (int b = 0; b < d; ++b) out.planted.push_back(lo + b * width);
        }
    }
    if ((int)out.planted.size() != pattern.size())
        throw std::invalid_argument("build_planted_host: pattern/label count mismatch");
    for (int i = 0; i < pattern.size(); ++i)
        for (int j = 0; j < pattern.size(); ++j)
            if (i != j && pattern.arc(i, j)) host.set_arc(out.planted[i], out.planted[j]);
    out.host = host;
    return out;
}

} // namespace ehc::testhost
