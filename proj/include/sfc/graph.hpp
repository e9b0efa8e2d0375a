#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "sfc/bitset.hpp"

namespace sfc {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    auto operator<=>(const Edge &) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

using EdgeList = std::vector<Edge>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edits go
/// through GraphBuilder or the vertex-deletion helpers, which return fresh graphs.
///
/// Edges are kept sorted lexicographically, so edge indices are stable for a
/// given graph and can be used as a dense universe (see EdgeSet).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws InvalidInput on self-loops, parallel edges or out-of-range ids.
    Graph(int n, EdgeList edges);

    int num_vertices() const noexcept { return n_; }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    bool adjacent(Vertex u, Vertex v) const noexcept { return adj_[u].test(static_cast<std::size_t>(v)); }
    const Bitset &neighbors(Vertex v) const noexcept { return adj_[v]; }
    std::span<const Vertex> neighbor_list(Vertex v) const noexcept { return nbrs_[v]; }
    int degree(Vertex v) const noexcept { return static_cast<int>(nbrs_[v].size()); }
    int max_degree() const noexcept;

    const EdgeList &edges() const noexcept { return edges_; }
    const Edge &edge(int index) const noexcept { return edges_[index]; }
    /// Index of edge {u,v} in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const noexcept;

    /// Empty vertex set of the right width.
    Bitset vertex_set() const { return Bitset(static_cast<std::size_t>(n_)); }

    bool operator==(const Graph &o) const noexcept { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    EdgeList edges_;
    std::vector<Bitset> adj_;
    std::vector<std::vector<Vertex>> nbrs_;
};

/// Copy-and-edit builder. Duplicate add_edge calls are ignored.
class GraphBuilder {
public:
    explicit GraphBuilder(int n = 0) : n_(n) {}
    explicit GraphBuilder(const Graph &g);

    Vertex add_vertex() { return n_++; }
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    int num_vertices() const noexcept { return n_; }

    Graph build() const;

private:
    int n_;
    std::vector<std::pair<Vertex, Vertex>> pending_;
};

/// A graph produced by deleting vertices, with new id -> original id.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> to_original;
};

Relabeled induced_subgraph(const Graph &g, const Bitset &keep);
Relabeled delete_vertices(const Graph &g, const Bitset &remove);

/// Disjoint union; vertices of b are shifted by a.num_vertices().
Graph disjoint_union(const Graph &a, const Graph &b);

/// Graph with vertices renamed by perm (new id of v is perm[v]).
Graph permute(const Graph &g, std::span<const Vertex> perm);

/// Subset of the edges of a fixed host graph, indexed by host edge index.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(const Graph &host) : bits_(static_cast<std::size_t>(host.num_edges())) {}

    static EdgeSet all(const Graph &host);
    /// Throws InvalidInput if some edge is not in the host.
    static EdgeSet from_edges(const Graph &host, std::span<const Edge> edges);

    bool contains(int index) const noexcept { return bits_.test(static_cast<std::size_t>(index)); }
    void insert(int index) noexcept { bits_.set(static_cast<std::size_t>(index)); }
    void erase(int index) noexcept { bits_.reset(static_cast<std::size_t>(index)); }
    int size() const noexcept { return static_cast<int>(bits_.count()); }
    bool empty() const noexcept { return bits_.none(); }

    std::vector<int> indices() const { return bits_.to_vector(); }
    EdgeList edges(const Graph &host) const;
    const Bitset &bits() const noexcept { return bits_; }

    bool operator==(const EdgeSet &) const = default;

private:
    Bitset bits_;
};

// Some small named graphs used throughout tests and the CLI.
namespace named {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph star(int leaves);
Graph empty(int n);
/// q disjoint edges plus p isolated vertices.
Graph matching_plus_isolated(int p, int q);
Graph petersen();
} // namespace named

} // namespace sfc
