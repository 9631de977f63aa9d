#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ehc/rational.hpp"

namespace ehc {

using Ordering = std::vector<int>; // permutation of 0..n-1, position -> vertex

bool is_permutation_of_n(const Ordering& perm, int n);

// Complete oriented graph on n labeled vertices. One bit per unordered pair
// {i,j}, i<j, in order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1);
// bit set <=> arc i->j (lower to higher).
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(int n);

    int size() const { return n_; }
    static int pair_count(int n) { return n * (n - 1) / 2; }

    int pair_index(int i, int j) const; // requires i < j
    bool pair_bit(int p) const { return (bits_[p >> 6] >> (p & 63)) & 1ULL; }
    void set_pair_bit(int p, bool v);

    // arc(u,v) is true iff u -> v
    bool arc(int u, int v) const;
    void set_arc(int u, int v);

    bool operator==(const Tournament& o) const { return n_ == o.n_ && bits_ == o.bits_; }

    std::string bitstring() const;
    static Tournament from_bitstring(int n, const std::string& bits);

    // TRN v1 text format: "trn <n>\n<bitstring>\n"
    std::string to_text() const;
    static Tournament from_text(const std::string& text);

    // Induced subtournament; X must list distinct in-range vertices. Vertices
    // are relabeled to 0..|X|-1 in increasing order of their labels in X.
    Tournament induced(std::vector<int> X) const;

    // Image under a relabeling: vertex v becomes perm[v].
    Tournament relabeled(const Ordering& perm) const;

    // Restriction read through an ordering: vertex at position k of theta
    // becomes k. Backward arcs of (*this, theta) become backward arcs of the
    // result under the identity.
    Tournament position_form(const Ordering& theta) const;

    int out_degree(int v) const;
    std::uint32_t out_mask(int v) const; // n <= 32 only

private:
    int n_ = 0;
    std::vector<std::uint64_t> bits_;
};

Tournament random_tournament(int n, std::uint64_t seed);

// Arcs (u,v) of T with position(u) > position(v) under theta, listed by
// increasing (pos(v), pos(u)).
std::vector<std::pair<int, int>> backward_arcs(const Tournament& t, const Ordering& theta);

struct BackwardArcGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized (min,max), sorted
    std::vector<int> component;             // vertex -> component id
    int component_count = 0;
};

BackwardArcGraph backward_arc_graph(const Tournament& t, const Ordering& theta);

Rational directed_density(const Tournament& t, const std::vector<int>& X,
                          const std::vector<int>& Y);

bool is_transitive(const Tournament& t);
// Beats-order v1 -> v2 -> ... if transitive, else empty.
std::vector<int> transitive_ordering(const Tournament& t);

} // namespace ehc
