#include "ehc/epsilon.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ehc/transitive.hpp"

namespace ehc {

namespace {

// Little-endian multi-word unsigned integer, just enough for a^p at desk scale.
using Big = std::vector<std::uint64_t>;

void mul_small(Big& x, std::uint64_t m) {
    std::uint64_t carry = 0;
    for (auto& w : x) {
        unsigned __int128 p = (unsigned __int128)w * m + carry;
        w = (std::uint64_t)p;
        carry = (std::uint64_t)(p >> 64);
    }
    if (carry) x.push_back(carry);
}

Big pow_big(unsigned a, unsigned p) {
    Big x{1};
    for (unsigned i = 0; i < p; ++i) mul_small(x, a);
    return x;
}

int cmp_big(const Big& a, const Big& b) {
    size_t na = a.size(), nb = b.size();
    while (na > 0 && a[na - 1] == 0) --na;
    while (nb > 0 && b[nb - 1] == 0) --nb;
    if (na != nb) return na < nb ? -1 : 1;
    for (size_t i = na; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

} // namespace

int pow_compare(unsigned a, unsigned p, unsigned n, unsigned e) {
    if (p > 4096 || e > 4096) throw std::invalid_argument("pow_compare: exponent too large");
    Big lhs = pow_big(a, p);
    Big rhs = pow_big(n, e);
    return cmp_big(lhs, rhs);
}

bool is_epsilon_critical(const Tournament& t, const Rational& eps, int n_cap) {
    if (eps.num <= 0 || eps > Rational(1)) throw std::invalid_argument("epsilon out of range (0,1]");
    if (t.size() > n_cap) throw std::invalid_argument("is_epsilon_critical: n above cap");
    if (t.size() == 0) return false;
    unsigned e = (unsigned)eps.num, p = (unsigned)eps.den;
    auto dp = tr_all_subsets(t);
    std::uint32_t full = (t.size() == 32) ? ~0u : ((1u << t.size()) - 1);
    // tr(T) < n^eps  <=>  tr(T)^p < n^e
    if (pow_compare(dp[full], p, (unsigned)t.size(), e) >= 0) return false;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        unsigned sz = (unsigned)std::popcount(mask);
        if (pow_compare(dp[mask], p, sz, e) < 0) return false;
    }
    return true;
}

} // namespace ehc
