#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"
#include "sfc/report.hpp"

namespace sfc {

/// Parameter l = |E(G)| - k: at most l edges may be weak.

/// Depth-l search tree. At each node the lexicographically smallest F-graph
/// of the current strong set (induced in the original G) is destroyed by
/// branching on its edges. Throws InvalidInput for an edgeless pattern.
SolveReport solve_weak_branching(const Graph &g, const Pattern &f, int l, std::uint64_t budget = default_node_budget);

/// Universe = edge indices of G, one set per F-graph of (G, E(G)).
struct HittingSetInstance {
    int universe = 0;
    int d = 0;
    int l = 0;
    std::vector<std::vector<int>> sets; ///< sorted, deduplicated, each of size d
};

HittingSetInstance compress_to_hitting_set(const Graph &g, const Pattern &f, int l = 0);

/// Exact bounded search tree; a hitting set of at most inst.l elements
/// (sorted), or nothing. Throws ResourceLimit when the node budget runs out.
std::optional<std::vector<int>> solve_hitting_set(const HittingSetInstance &inst,
                                                  std::uint64_t budget = default_node_budget);

/// compress_to_hitting_set + solve_hitting_set, reported like the other solvers.
SolveReport solve_via_hitting_set(const Graph &g, const Pattern &f, int l, std::uint64_t budget = default_node_budget);

/// `u <universe> s <sets> d <d> l <l>`, then one line of 1-based element ids per set.
std::string serialize_hitting_set(const HittingSetInstance &inst);
HittingSetInstance parse_hitting_set(std::string_view text);

} // namespace sfc
