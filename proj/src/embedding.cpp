#include "ehc/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace ehc {

namespace {

bool extend(const Tournament& host, const Tournament& pattern, const std::vector<int>& order,
            size_t depth, std::vector<int>& map, std::vector<char>& used) {
    if (depth == order.size()) return true;
    int u = order[depth];
    for (int v = 0; v < host.size(); ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (size_t k = 0; k < depth && ok; ++k) {
            int u2 = order[k];
            if (pattern.arc(u, u2) != host.arc(v, map[u2])) ok = false;
        }
        if (!ok) continue;
        map[u] = v;
        used[v] = 1;
        if (extend(host, pattern, order, depth + 1, map, used)) return true;
        used[v] = 0;
        map[u] = -1;
    }
    return false;
}

} // namespace

std::optional<Embedding> find_induced_copy(const Tournament& host, const Tournament& pattern) {
    if (pattern.size() > host.size()) return std::nullopt;
    std::vector<int> order(pattern.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pattern.out_degree(a) > pattern.out_degree(b);
    });
    std::vector<int> map(pattern.size(), -1);
    std::vector<char> used(host.size(), 0);
    if (!extend(host, pattern, order, 0, map, used)) return std::nullopt;
    return Embedding{map};
}

bool embedding_valid(const Tournament& host, const Tournament& pattern, const Embedding& e) {
    if ((int)e.map.size() != pattern.size()) return false;
    std::vector<char> used(host.size(), 0);
    for (int v : e.map) {
        if (v < 0 || v >= host.size() || used[v]) return false;
        used[v] = 1;
    }
    for (int u = 0; u < pattern.size(); ++u)
        for (int v = u + 1; v < pattern.size(); ++v)
            if (pattern.arc(u, v) != host.arc(e.map[u], e.map[v])) return false;
    return true;
}

bool embedding_valid(const Tournament& host, const Digraph& pattern, const std::vector<int>& map) {
    if ((int)map.size() != pattern.size()) return false;
    std::vector<char> used(host.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= host.size() || used[v]) return false;
        used[v] = 1;
    }
    for (int u = 0; u < pattern.size(); ++u)
        for (int v = 0; v < pattern.size(); ++v)
            if (u != v && pattern.arc(u, v) && !host.arc(map[u], map[v])) return false;
    return true;
}

} // namespace ehc
