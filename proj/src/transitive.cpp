#include "ehc/transitive.hpp"

#include <bit>
#include <stdexcept>

namespace ehc {

namespace {
constexpr int kMaxTrVertices = 22;

std::vector<std::uint32_t> out_masks(const Tournament& t) {
    std::vector<std::uint32_t> out(t.size());
    for (int v = 0; v < t.size(); ++v) out[v] = t.out_mask(v);
    return out;
}
} // namespace

std::vector<std::uint8_t> tr_all_subsets(const Tournament& t) {
    int n = t.size();
    if (n > kMaxTrVertices) throw std::invalid_argument("tr: n above desk-scale bound");
    auto out = out_masks(t);
    std::vector<std::uint8_t> dp(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 1; mask < dp.size(); ++mask) {
        std::uint32_t rest = mask;
        std::uint8_t best = 0;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint8_t c = dp[mask & out[v]];
            if (c > best) best = c;
        }
        dp[mask] = std::uint8_t(best + 1);
    }
    return dp;
}

TrResult tr(const Tournament& t) {
    TrResult r;
    if (t.size() == 0) return r;
    auto dp = tr_all_subsets(t);
    auto out = out_masks(t);
    std::uint32_t mask = (t.size() == 32) ? ~0u : ((1u << t.size()) - 1);
    r.size = dp[mask];
    while (mask) {
        int want = dp[mask] - 1;
        for (std::uint32_t rest = mask;;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (dp[mask & out[v]] == want) {
                r.witness.push_back(v);
                mask &= out[v];
                break;
            }
            if (!rest) throw std::logic_error("tr: witness reconstruction failed");
        }
    }
    return r;
}

int tr_size(const Tournament& t) {
    if (t.size() == 0) return 0;
    auto dp = tr_all_subsets(t);
    return dp[(t.size() == 32) ? ~0u : ((1u << t.size()) - 1)];
}

} // namespace ehc
