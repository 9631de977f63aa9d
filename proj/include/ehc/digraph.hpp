#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehc/tournament.hpp"

namespace ehc {

// Partial orientation: every unordered pair is forward, backward, or left
// unoriented. Houses mutant digraphs, where deleted arcs are represented as
// explicitly unoriented pairs so orientation sweeps can enumerate completions.
class Digraph {
public:
    enum class Pair : std::int8_t { Unoriented = 0, LowHigh = 1, HighLow = 2 };

    Digraph() = default;
    explicit Digraph(int n) : n_(n), pairs_(Tournament::pair_count(n), Pair::Unoriented) {}

    static Digraph all_forward(int n) {
        Digraph d(n);
        std::fill(d.pairs_.begin(), d.pairs_.end(), Pair::LowHigh);
        return d;
    }
    static Digraph from_tournament(const Tournament& t);

    int size() const { return n_; }
    int pair_index(int i, int j) const { return i * (n_ - 1) - i * (i - 1) / 2 + (j - i - 1); }

    bool oriented(int u, int v) const {
        return pairs_[pair_index(std::min(u, v), std::max(u, v))] != Pair::Unoriented;
    }
    // arc(u,v) true iff the pair is oriented u -> v
    bool arc(int u, int v) const {
        if (u == v) return false;
        Pair p = pairs_[pair_index(std::min(u, v), std::max(u, v))];
        if (p == Pair::Unoriented) return false;
        return (u < v) == (p == Pair::LowHigh);
    }
    void set_arc(int u, int v) {
        pairs_[pair_index(std::min(u, v), std::max(u, v))] = (u < v) ? Pair::LowHigh : Pair::HighLow;
    }
    void unorient(int u, int v) {
        pairs_[pair_index(std::min(u, v), std::max(u, v))] = Pair::Unoriented;
    }

    std::vector<std::pair<int, int>> unoriented_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (pairs_[pair_index(i, j)] == Pair::Unoriented) out.emplace_back(i, j);
        return out;
    }
    int oriented_pair_count() const {
        int c = 0;
        for (auto p : pairs_)
            if (p != Pair::Unoriented) ++c;
        return c;
    }

    // Complete to a tournament; unoriented pairs oriented low->high when the
    // matching completion bit is set.
    Tournament complete(const std::vector<bool>& completion_low_high) const;
    Tournament complete_all_forward() const;

    Digraph induced(std::vector<int> X) const;

    // DGR v1 text format: "dgr <n>\n<pair string>\n" over {'1','0','-'}:
    // '1' lower->higher, '0' higher->lower, '-' unoriented.
    std::string to_text() const;
    static Digraph from_text(const std::string& text);

    bool operator==(const Digraph& o) const { return n_ == o.n_ && pairs_ == o.pairs_; }

private:
    int n_ = 0;
    std::vector<Pair> pairs_;
};

inline Digraph Digraph::from_tournament(const Tournament& t) {
    Digraph d(t.size());
    for (int i = 0; i < t.size(); ++i)
        for (int j = i + 1; j < t.size(); ++j)
            if (t.arc(i, j)) d.set_arc(i, j); else d.set_arc(j, i);
    return d;
}

inline Tournament Digraph::complete(const std::vector<bool>& completion_low_high) const {
    Tournament t(n_);
    size_t k = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            Pair p = pairs_[pair_index(i, j)];
            if (p == Pair::Unoriented) {
                if (k >= completion_low_high.size())
                    throw std::invalid_argument("complete: completion too short");
                p = completion_low_high[k++] ? Pair::LowHigh : Pair::HighLow;
            }
            if (p == Pair::LowHigh) t.set_arc(i, j); else t.set_arc(j, i);
        }
    if (k != completion_low_high.size())
        throw std::invalid_argument("complete: completion too long");
    return t;
}

inline Tournament Digraph::complete_all_forward() const {
    return complete(std::vector<bool>(unoriented_pairs().size(), true));
}

inline Digraph Digraph::induced(std::vector<int> X) const {
    std::sort(X.begin(), X.end());
    Digraph d((int)X.size());
    for (int a = 0; a < d.n_; ++a)
        for (int b = a + 1; b < d.n_; ++b) {
            if (arc(X[a], X[b])) d.set_arc(a, b);
            else if (arc(X[b], X[a])) d.set_arc(b, a);
        }
    return d;
}

inline std::string Digraph::to_text() const {
    std::string s;
    s.reserve(pairs_.size());
    for (auto p : pairs_)
        s += (p == Pair::Unoriented ? '-' : (p == Pair::LowHigh ? '1' : '0'));
    return "dgr " + std::to_string(n_) + "\n" + s + "\n";
}

inline Digraph Digraph::from_text(const std::string& text) {
    size_t nl = text.find('\n');
    std::string header = text.substr(0, nl);
    if (header.rfind("dgr ", 0) != 0) throw std::invalid_argument("digraph: malformed header");
    int n = std::stoi(header.substr(4));
    std::string body;
    if (nl != std::string::npos)
        for (char c : text.substr(nl + 1)) {
            if (c == '1' || c == '0' || c == '-') body += c;
            else if (c != '\n' && c != '\r' && c != ' ')
                throw std::invalid_argument("digraph: illegal character");
        }
    if ((int)body.size() != Tournament::pair_count(n))
        throw std::invalid_argument("digraph: pair string length mismatch");
    Digraph d(n);
    for (int p = 0; p < (int)body.size(); ++p)
        d.pairs_[p] = body[p] == '-' ? Pair::Unoriented : (body[p] == '1' ? Pair::LowHigh : Pair::HighLow);
    return d;
}

} // namespace ehc
