#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

enum class Decision { Yes, No, Inconclusive };

std::string_view to_string(Decision d);

inline constexpr std::uint64_t default_node_budget = 50'000'000;

struct SolveStats {
    std::uint64_t nodes = 0;
    std::map<std::string, std::int64_t> rules; ///< rule / shortcut name -> firings
    double millis = 0;
};

/// Outcome of any solver. Witness edges are in the input graph's ids, sorted.
struct SolveReport {
    Decision decision = Decision::No;
    EdgeList witness;
    std::optional<int> optimum;
    SolveStats stats;
    std::string algorithm;
    std::vector<std::string> trace;
    /// Upper bound on the probability that a randomized "no" is wrong.
    std::optional<double> miss_probability;

    bool yes() const noexcept { return decision == Decision::Yes; }
    bool no() const noexcept { return decision == Decision::No; }
    bool inconclusive() const noexcept { return decision == Decision::Inconclusive; }

    /// Rules that never fired are left out of the map.
    void fire(const std::string &rule, std::int64_t times = 1)
    {
        if (times != 0)
            stats.rules[rule] += times;
    }
};

/// Sort and map witness edges through a relabeling (new id -> original id).
EdgeList lift_edges(const EdgeList &edges, const std::vector<Vertex> &to_original);

} // namespace sfc
