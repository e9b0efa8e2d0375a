#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

struct Matching {
    EdgeList edges;
    Bitset covered;

    int size() const noexcept { return static_cast<int>(edges.size()); }
};

/// Maximum cardinality matching (Edmonds' blossom algorithm, O(n^3)).
Matching max_matching(const Graph &g);

/// Greedy inclusion-maximal matching scanning edges in `order` (edge indices);
/// lexicographic edge order when omitted.
Matching maximal_matching_greedy(const Graph &g, std::optional<std::span<const int>> order = std::nullopt);

bool is_matching(const Graph &g, std::span<const Edge> edges);

/// Largest number of edges from `within` whose endpoints are pairwise
/// non-adjacent across edges (an induced matching of g). Throws ResourceLimit
/// when more than max_induced_matching_limit edges are supplied.
int max_induced_matching(const Graph &g, std::span<const Edge> within);

inline constexpr int max_induced_matching_limit = 25;

} // namespace sfc
