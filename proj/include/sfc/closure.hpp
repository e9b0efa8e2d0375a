#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"

namespace sfc {

/// Vertex set S certifying a closure violation: H[S] ~ F and G[S] ~ F.
struct FGraphWitness {
    std::vector<Vertex> vertices; // sorted

    auto operator<=>(const FGraphWitness &) const = default;
};

inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

/// F-graphs of the spanning subgraph with edge set h, as distinct sorted vertex
/// sets in lexicographic order. At most `limit` are returned.
///
/// Partial maps from F into G are extended so that F-edges land on h-edges and
/// F-non-edges land on G-non-edges; that is exactly H[S] = G[S] ~ F.
std::vector<FGraphWitness> enumerate_f_graphs(const Graph &g, const EdgeSet &h, const Pattern &f,
                                              std::size_t limit = unlimited);

bool satisfies_closure(const Graph &g, const EdgeSet &h, const Pattern &f);
bool satisfies_closure(const Graph &g, std::span<const Edge> h, const Pattern &f);

/// An induced copy of F in G together with the indices of its edges.
struct FCopy {
    std::vector<Vertex> vertices;
    std::vector<int> edges;
};

/// All F-graphs of (G, E(G)), i.e. every induced copy of F in G.
std::vector<FCopy> induced_copies(const Graph &g, const Pattern &f);

/// Incremental closure bookkeeping over a fixed host graph: a strong edge set
/// violates the closure iff some induced copy of F has all of its edges strong.
class ClosureTracker {
public:
    ClosureTracker(const Graph &g, const Pattern &f);

    const Graph &graph() const noexcept { return *g_; }
    const std::vector<FCopy> &copies() const noexcept { return copies_; }
    const std::vector<int> &copies_of_edge(int e) const noexcept { return by_edge_[e]; }

    /// A copy with no edges can never be broken (pK1 patterns).
    bool unbreakable() const noexcept { return unbreakable_; }

    bool is_strong(int e) const noexcept { return strong_[e] != 0; }
    int strong_count() const noexcept { return strong_count_; }
    int strong_in_copy(int c) const noexcept { return strong_in_copy_[c]; }

    /// Would marking e strong complete some copy?
    bool can_add(int e) const noexcept;
    void add(int e) noexcept;
    void remove(int e) noexcept;
    void clear() noexcept;

    EdgeList strong_edges() const;

private:
    const Graph *g_;
    std::vector<FCopy> copies_;
    std::vector<std::vector<int>> by_edge_;
    std::vector<int> strong_in_copy_;
    std::vector<char> strong_;
    int strong_count_ = 0;
    bool unbreakable_ = false;
};

} // namespace sfc
