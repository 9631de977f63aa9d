#include "ehc/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ehc/embedding.hpp"

namespace ehc {

namespace {

// Packed pair bits under the relabeling v -> perm[v], as a 64-bit key.
std::uint64_t relabel_key(const Tournament& t, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    int p = 0;
    int n = t.size();
    std::vector<int> pos(n); // pos[new label] = old vertex
    for (int v = 0; v < n; ++v) pos[perm[v]] = v;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
            if (t.arc(pos[i], pos[j])) key |= (1ULL << p);
    return key;
}

std::uint64_t canonical_key(const Tournament& t) {
    int n = t.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        best = std::min(best, relabel_key(t, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string key_to_bits(std::uint64_t key, int n) {
    std::string s(Tournament::pair_count(n), '0');
    for (int p = 0; p < (int)s.size(); ++p)
        if ((key >> p) & 1ULL) s[p] = '1';
    return s;
}

} // namespace

std::string canonical_form(const Tournament& t, int bound) {
    if (t.size() > bound || t.size() > 10)
        throw std::invalid_argument("canonical_form: n above canonicalization bound");
    if (t.size() == 0) return "";
    return key_to_bits(canonical_key(t), t.size());
}

std::vector<Tournament> enumerate_tournaments(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate: exhaustive mode requires 1 <= n <= 7");
    // Grow one vertex at a time, deduplicating by canonical key at each level.
    std::set<std::uint64_t> reps{0}; // the 1-vertex tournament
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (std::uint64_t key : reps) {
            Tournament base = Tournament::from_bitstring(k - 1, key_to_bits(key, k - 1));
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                Tournament t(k);
                for (int i = 0; i < k - 1; ++i)
                    for (int j = i + 1; j < k - 1; ++j)
                        if (base.arc(i, j)) t.set_arc(i, j); else t.set_arc(j, i);
                for (int i = 0; i < k - 1; ++i)
                    if ((mask >> i) & 1) t.set_arc(i, k - 1); else t.set_arc(k - 1, i);
                next.insert(canonical_key(t));
            }
        }
        reps.swap(next);
    }
    std::vector<Tournament> out;
    out.reserve(reps.size());
    for (std::uint64_t key : reps) out.push_back(Tournament::from_bitstring(n, key_to_bits(key, n)));
    return out;
}

bool is_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return false;
    if (a.size() <= kDefaultCanonBound) return canonical_form(a) == canonical_form(b);
    return find_induced_copy(a, b).has_value() && find_induced_copy(b, a).has_value();
}

} // namespace ehc
