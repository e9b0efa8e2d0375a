#pragma once

#include <cstdint>

#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"
#include "sfc/report.hpp"

namespace sfc {

/// Exact decision by include/exclude branch and bound over the edges. Feasible
/// strong sets are closed under taking subsets, so a branch is cut as soon as a
/// strong edge would complete an induced copy of F, or when the remaining
/// undecided edges minus a disjoint-copy packing bound cannot reach k.
///
/// Exceeding `budget` search nodes yields Decision::Inconclusive, never a
/// wrong answer.
SolveReport solve_exact(const Graph &g, const Pattern &f, int k, std::uint64_t budget = default_node_budget);

/// Maximum number of strong edges, by repeated solve_exact calls above the
/// best witness found so far. optimum is empty if no spanning subgraph at all
/// satisfies the closure (possible only for edgeless patterns).
SolveReport optimum(const Graph &g, const Pattern &f, std::uint64_t budget = default_node_budget);

} // namespace sfc
