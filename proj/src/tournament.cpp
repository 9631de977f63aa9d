#include "ehc/tournament.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ehc/rng.hpp"

namespace ehc {

bool is_permutation_of_n(const Ordering& perm, int n) {
    if ((int)perm.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Tournament::Tournament(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("tournament: negative size");
    bits_.assign((pair_count(n) + 63) / 64, 0);
}

int Tournament::pair_index(int i, int j) const {
    return i * (n_ - 1) - i * (i - 1) / 2 + (j - i - 1);
}

void Tournament::set_pair_bit(int p, bool v) {
    if (v)
        bits_[p >> 6] |= (1ULL << (p & 63));
    else
        bits_[p >> 6] &= ~(1ULL << (p & 63));
}

bool Tournament::arc(int u, int v) const {
    if (u == v) return false;
    if (u < v) return pair_bit(pair_index(u, v));
    return !pair_bit(pair_index(v, u));
}

void Tournament::set_arc(int u, int v) {
    if (u == v) throw std::invalid_argument("tournament: loop");
    if (u < v)
        set_pair_bit(pair_index(u, v), true);
    else
        set_pair_bit(pair_index(v, u), false);
}

std::string Tournament::bitstring() const {
    std::string s(pair_count(n_), '0');
    for (int p = 0; p < (int)s.size(); ++p)
        if (pair_bit(p)) s[p] = '1';
    return s;
}

Tournament Tournament::from_bitstring(int n, const std::string& bits) {
    if ((int)bits.size() != pair_count(n))
        throw std::invalid_argument("tournament: bitstring length != n(n-1)/2");
    Tournament t(n);
    for (int p = 0; p < (int)bits.size(); ++p) {
        if (bits[p] == '1')
            t.set_pair_bit(p, true);
        else if (bits[p] != '0')
            throw std::invalid_argument("tournament: illegal character in bitstring");
    }
    return t;
}

std::string Tournament::to_text() const {
    return "trn " + std::to_string(n_) + "\n" + bitstring() + "\n";
}

Tournament Tournament::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    long long n = -1;
    if (!(in >> tag >> n) || tag != "trn" || n < 0)
        throw std::invalid_argument("tournament: malformed header, expected 'trn <n>'");
    std::string bits;
    if (n > 1 && !(in >> bits)) throw std::invalid_argument("tournament: missing bitstring");
    if (n <= 1) {
        std::string rest;
        in >> rest;
        if (!rest.empty()) throw std::invalid_argument("tournament: unexpected trailing data");
        bits.clear();
    }
    return from_bitstring((int)n, bits);
}

Tournament Tournament::induced(std::vector<int> X) const {
    std::sort(X.begin(), X.end());
    for (size_t i = 0; i < X.size(); ++i) {
        if (X[i] < 0 || X[i] >= n_) throw std::invalid_argument("induced: vertex out of range");
        if (i > 0 && X[i] == X[i - 1]) throw std::invalid_argument("induced: duplicate vertex");
    }
    Tournament s((int)X.size());
    for (int a = 0; a < s.n_; ++a)
        for (int b = a + 1; b < s.n_; ++b)
            if (arc(X[a], X[b])) s.set_arc(a, b); else s.set_arc(b, a);
    return s;
}

Tournament Tournament::relabeled(const Ordering& perm) const {
    if (!is_permutation_of_n(perm, n_)) throw std::invalid_argument("relabeled: not a permutation");
    Tournament s(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (arc(u, v)) s.set_arc(perm[u], perm[v]); else s.set_arc(perm[v], perm[u]);
    return s;
}

Tournament Tournament::position_form(const Ordering& theta) const {
    if (!is_permutation_of_n(theta, n_)) throw std::invalid_argument("position_form: not a permutation");
    Tournament s(n_);
    for (int p = 0; p < n_; ++p)
        for (int q = p + 1; q < n_; ++q)
            if (arc(theta[p], theta[q])) s.set_arc(p, q); else s.set_arc(q, p);
    return s;
}

int Tournament::out_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && arc(v, u)) ++d;
    return d;
}

std::uint32_t Tournament::out_mask(int v) const {
    std::uint32_t m = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && arc(v, u)) m |= (1u << u);
    return m;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    Tournament t(n);
    SplitMix64 g(seed);
    for (int p = 0; p < Tournament::pair_count(n); ++p)
        t.set_pair_bit(p, g.next_bit());
    return t;
}

std::vector<std::pair<int, int>> backward_arcs(const Tournament& t, const Ordering& theta) {
    if (!is_permutation_of_n(theta, t.size()))
        throw std::invalid_argument("backward_arcs: not a permutation");
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < t.size(); ++p)
        for (int q = p + 1; q < t.size(); ++q)
            if (t.arc(theta[q], theta[p])) out.emplace_back(theta[q], theta[p]);
    return out;
}

BackwardArcGraph backward_arc_graph(const Tournament& t, const Ordering& theta) {
    BackwardArcGraph g;
    g.n = t.size();
    for (auto [u, v] : backward_arcs(t, theta))
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(g.edges.begin(), g.edges.end());
    // union-find for components
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) { while (parent[x] != x) x = parent[x] = parent[parent[x]]; return x; };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    g.component.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (g.component[r] < 0) g.component[r] = g.component_count++;
        g.component[v] = g.component[r];
    }
    return g;
}

Rational directed_density(const Tournament& t, const std::vector<int>& X,
                          const std::vector<int>& Y) {
    if (X.empty() || Y.empty()) throw std::invalid_argument("density: empty set");
    std::set<int> xs(X.begin(), X.end());
    for (int y : Y)
        if (xs.count(y)) throw std::invalid_argument("density: sets overlap");
    long long e = 0;
    for (int x : X)
        for (int y : Y)
            if (t.arc(x, y)) ++e;
    return Rational(e, (long long)X.size() * (long long)Y.size());
}

bool is_transitive(const Tournament& t) {
    // A tournament is transitive iff its out-degrees are pairwise distinct.
    std::vector<char> seen(t.size(), 0);
    for (int v = 0; v < t.size(); ++v) {
        int d = t.out_degree(v);
        if (seen[d]) return false;
        seen[d] = 1;
    }
    return true;
}

std::vector<int> transitive_ordering(const Tournament& t) {
    if (!is_transitive(t)) return {};
    std::vector<int> order(t.size());
    for (int v = 0; v < t.size(); ++v) order[t.size() - 1 - t.out_degree(v)] = v;
    return order;
}

} // namespace ehc
