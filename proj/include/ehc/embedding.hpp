#pragma once

#include <optional>
#include <vector>

#include "ehc/digraph.hpp"
#include "ehc/tournament.hpp"

namespace ehc {

// Injective, arc-preserving map from pattern vertices to host vertices.
struct Embedding {
    std::vector<int> map; // pattern vertex -> host vertex
};

// Induced copy of H in T: backtracking over H's vertices in out-degree
// descending order with arc-consistency pruning against placed vertices.
std::optional<Embedding> find_induced_copy(const Tournament& host, const Tournament& pattern);

inline bool is_free(const Tournament& host, const Tournament& pattern) {
    return !find_induced_copy(host, pattern).has_value();
}

bool embedding_valid(const Tournament& host, const Tournament& pattern, const Embedding& e);
bool embedding_valid(const Tournament& host, const Digraph& pattern, const std::vector<int>& map);

} // namespace ehc
