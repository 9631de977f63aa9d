#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ehc/digraph.hpp"
#include "ehc/families.hpp"
#include "ehc/mutants.hpp"
#include "ehc/rational.hpp"
#include "ehc/tournament.hpp"

namespace ehc {

// Sequence of disjoint vertex sets, each linear (w=0, |S| >= c*n) or
// transitive (w=1, |S| >= c*tr(T)), with pairwise one-vertex density
// conditions at 1 - lambda. delta subdivides transitive sets for labeling.
struct SmoothStructure {
    std::vector<std::vector<int>> sets;
    std::vector<int> w;
    std::map<int, int> delta;                    // w-index -> sub-block count
    std::map<int, std::vector<int>> transitive_orders; // w-index -> stored transitive ordering
    Rational c{1, 2};
    Rational lambda{1, 4};

    std::string to_json() const;
    static SmoothStructure from_json(const std::string& s);
};

ValidationReport verify_smooth(const Tournament& t, const SmoothStructure& chi);

// d(X,Y) >= 1 - lambda/(eta1*eta2) given d(A1,A2) >= 1-lambda, |X| >= eta1|A1|,
// |Y| >= eta2|A2|. Returns the margin d(X,Y) - bound; never negative on valid
// input.
struct BoundCheck {
    bool ok = false;
    Rational margin;
};
BoundCheck subset_density_bound(const Tournament& t, const std::vector<int>& A1,
                                const std::vector<int>& A2, const std::vector<int>& X,
                                const std::vector<int>& Y, const Rational& lambda,
                                const Rational& eta1, const Rational& eta2);

// Vertices of S_star (a subset of chi set j) adjacent from every x in A that
// sits in a later set, and adjacent to every x in an earlier set. Certified
// lower bound (1 - k*lambda/gamma)|S_star| with gamma = |S_star|/|S_j|.
struct RestrictionResult {
    std::vector<int> vertices;
    bool bound_ok = false;
    Rational bound; // the certified lower bound on |vertices|
};
RestrictionResult common_restriction(const Tournament& t, const SmoothStructure& chi, int j,
                                     const std::vector<int>& S_star, const std::vector<int>& A);

// Per-vertex labels: linear sets carry one label, transitive sets carry one
// per sub-block of width floor(|S|/delta). Label 0 = unlabeled remainder.
struct XiLabeling {
    std::vector<int> label; // host vertex -> label (0 = none)
    int max_label = 0;
    std::vector<std::vector<int>> candidates; // label -> host vertices (1-based index)
};
XiLabeling xi_labels(const Tournament& t, const SmoothStructure& chi);

bool is_well_contained(const std::vector<int>& f, const Digraph& pattern, const Tournament& host,
                       const XiLabeling& xi);

// Deterministic backtracking for a well-contained copy: pattern position j
// must land in label class j; anchors (non-leaves) are placed first, leaf
// positions last; candidates are tried in increasing vertex id.
struct EmbedResult {
    std::optional<std::vector<int>> embedding;
    bool exhausted = false; // true: absence proved; false + no embedding: budget ran out
    std::uint64_t nodes = 0;
};
EmbedResult find_embedding(const Digraph& pattern, const Tournament& host, const XiLabeling& xi,
                           const std::vector<char>& leaf_flags = {},
                           std::uint64_t budget = 50'000'000);

// Recovery of the base asterism from a well-contained copy of its
// corresponding digraph: per block, the first firing case drops six vertices;
// survivors spell the block under one of the theta-set orderings.
struct AsterismExtraction {
    std::vector<int> h_embedding; // asterism position -> host vertex, theta' order
    Ordering theta_prime;         // the theta-set member realized
    std::vector<int> case_used;   // per block, 0..3
    bool verified = false;
};
AsterismExtraction extract_asterism(const Tournament& host, const FamilySpec& asterism,
                                    const CorrespondingDigraph& cd, const std::vector<int>& f);

// Spider-or-triangle recovery from a completed mutant spider copy. gamma maps
// spider positions to host vertices.
struct SpiderExtraction {
    char tag = 's';               // 's' full spider, 't' triangle
    std::vector<int> vertices;    // host vertices of the spider copy / triangle
    std::array<int, 3> triangle{-1, -1, -1}; // positions (earliest..latest) when tag=='t'
    bool verified = false;
};
SpiderExtraction extract_spider_or_triangle(const Tournament& host, const SpiderSpec& spec,
                                            const std::vector<int>& gamma);

// Tiny brute force over ordered disjoint set tuples. n <= 12, |w| <= 3.
// divisor > 0 additionally requires every |S_i| divisible by it.
struct SmoothSearchResult {
    std::optional<SmoothStructure> structure;
    std::uint64_t candidates = 0;
};
SmoothSearchResult search_smooth_structure(const Tournament& t, const Rational& c,
                                           const Rational& lambda, const std::vector<int>& w,
                                           int divisor = 0);

} // namespace ehc
