#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"
#include "sfc/report.hpp"

namespace sfc {

inline constexpr std::uint64_t default_seed = 0x5eed5eedULL;

/// Independent sets of size p are searched by plain branching.
SolveReport solve_pk1(const Graph &g, int p, int k);

/// Keeps every edge uv for which G - N[{u,v}] has no independent p-set; that
/// set is the unique maximum solution. p = 0 (F = K2) is yes iff k = 0.
SolveReport solve_pk1_k2(const Graph &g, int p, int k);

struct KernelOutput {
    Graph graph;
    int k = 0;
    std::vector<Vertex> to_original;
    /// Set when the greedy matching already has k edges (witness in input ids).
    std::optional<SolveReport> early;
    int twin_removals = 0;
    int matching_size = 0;
    /// Vertex bound 2^(2k-2)(|V(F)|+k)+2k-2 (saturating; 0 when k = 0).
    std::uint64_t vertex_bound = 0;
};

/// Twin reduction (false-twin classes larger than |V(F)|+k lose vertices) and
/// the greedy matching shortcut. Requires a pattern with a component on >= 3
/// vertices.
KernelOutput kernelize_big_component(const Graph &g, const Pattern &f, int k);

/// Kernelize, then run the exact search on the kernel.
SolveReport solve_big_component(const Graph &g, const Pattern &f, int k, std::uint64_t budget = default_node_budget);

/// Index set I with sum c = k exactly and sum w <= wmax, or nothing.
/// Items with c_i > k are ignored. O(k * |c|) table.
std::optional<std::vector<int>> knapsack_exact(std::span<const int> c, std::span<const int> w, int k, int wmax);

struct SeparationPlan {
    int a = 0;
    std::int64_t b = 0;
    double red_probability = 1;
    double round_success = 1; ///< lower bound on P(A inside S, B outside S)
    std::uint64_t rounds = 1; ///< rounds needed for miss probability <= 2^-20
};

/// Colouring parameters for the random separation in solve_qk2.
SeparationPlan plan_separation(int k, int max_degree, int num_edges);

inline constexpr std::uint64_t default_round_cap = 20'000'000;

/// Random separation over edge colourings, one knapsack per round. A "no"
/// whose miss probability cannot be pushed below 2^-20 within round_cap
/// rounds is reported as inconclusive.
SolveReport solve_qk2(const Graph &g, int q, int k, std::uint64_t seed = default_seed,
                      std::uint64_t round_cap = default_round_cap);

SolveReport solve_pk1_qk2(const Graph &g, int p, int q, int k, std::uint64_t seed = default_seed,
                          std::uint64_t budget = default_node_budget, std::uint64_t round_cap = default_round_cap);

/// Dispatch on the pattern class.
SolveReport solve_by_k(const Graph &g, const Pattern &f, int k, std::uint64_t seed = default_seed,
                       std::uint64_t budget = default_node_budget);

struct DegenerateKernel {
    KernelOutput kernel;
    int degeneracy = 0;
    /// |X| + C(|X|,d+1)*d + sum_{i<=d} C(|X|,i)*(|V(F)|+k), with X the matched
    /// vertices of the greedy matching (saturating).
    std::uint64_t bound = 0;
};

DegenerateKernel degenerate_kernel_bound(const Graph &g, const Pattern &f, int k);

} // namespace sfc
