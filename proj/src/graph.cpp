#include "sfc/graph.hpp"

#include <algorithm>
#include <string>

#include "sfc/error.hpp"

namespace sfc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n))), nbrs_(static_cast<std::size_t>(n))
{
    if (n < 0)
        throw InvalidInput("negative vertex count");
}

Graph::Graph(int n, EdgeList edges) : Graph(n)
{
    for (auto &e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
        if (e.u == e.v)
            throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
        e = make_edge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw InvalidInput("parallel edge");
    edges_ = std::move(edges);
    for (const auto &e : edges_) {
        adj_[e.u].set(static_cast<std::size_t>(e.v));
        adj_[e.v].set(static_cast<std::size_t>(e.u));
        nbrs_[e.u].push_back(e.v);
        nbrs_[e.v].push_back(e.u);
    }
    for (auto &l : nbrs_)
        std::sort(l.begin(), l.end());
}

int Graph::max_degree() const noexcept
{
    int d = 0;
    for (const auto &l : nbrs_)
        d = std::max(d, static_cast<int>(l.size()));
    return d;
}

int Graph::edge_index(Vertex u, Vertex v) const noexcept
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v || !adjacent(u, v))
        return -1;
    const Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

GraphBuilder::GraphBuilder(const Graph &g) : n_(g.num_vertices())
{
    for (const auto &e : g.edges())
        pending_.emplace_back(e.u, e.v);
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u == v)
        throw InvalidInput("self-loop at vertex " + std::to_string(u));
    const Edge e = make_edge(u, v);
    pending_.emplace_back(e.u, e.v);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    const Edge e = make_edge(u, v);
    std::erase(pending_, std::make_pair(e.u, e.v));
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const
{
    const Edge e = make_edge(u, v);
    return std::find(pending_.begin(), pending_.end(), std::make_pair(e.u, e.v)) != pending_.end();
}

Graph GraphBuilder::build() const
{
    auto p = pending_;
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    EdgeList edges;
    edges.reserve(p.size());
    for (auto [u, v] : p)
        edges.push_back({u, v});
    return Graph(n_, std::move(edges));
}

Relabeled induced_subgraph(const Graph &g, const Bitset &keep)
{
    std::vector<Vertex> new_id(static_cast<std::size_t>(g.num_vertices()), -1);
    Relabeled out;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (keep.test(static_cast<std::size_t>(v))) {
            new_id[v] = static_cast<Vertex>(out.to_original.size());
            out.to_original.push_back(v);
        }
    }
    EdgeList edges;
    for (const auto &e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            edges.push_back({new_id[e.u], new_id[e.v]});
    out.graph = Graph(static_cast<int>(out.to_original.size()), std::move(edges));
    return out;
}

Relabeled delete_vertices(const Graph &g, const Bitset &remove)
{
    Bitset keep = g.vertex_set();
    keep.set_all();
    keep -= remove;
    return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph &a, const Graph &b)
{
    const int shift = a.num_vertices();
    EdgeList edges = a.edges();
    for (const auto &e : b.edges())
        edges.push_back({e.u + shift, e.v + shift});
    return Graph(a.num_vertices() + b.num_vertices(), std::move(edges));
}

Graph permute(const Graph &g, std::span<const Vertex> perm)
{
    EdgeList edges;
    edges.reserve(g.edges().size());
    for (const auto &e : g.edges())
        edges.push_back(make_edge(perm[e.u], perm[e.v]));
    return Graph(g.num_vertices(), std::move(edges));
}

EdgeSet EdgeSet::all(const Graph &host)
{
    EdgeSet s(host);
    s.bits_.set_all();
    return s;
}

EdgeSet EdgeSet::from_edges(const Graph &host, std::span<const Edge> edges)
{
    EdgeSet s(host);
    for (const auto &e : edges) {
        const int idx = host.edge_index(e.u, e.v);
        if (idx < 0)
            throw InvalidInput("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the host graph");
        s.insert(idx);
    }
    return s;
}

EdgeList EdgeSet::edges(const Graph &host) const
{
    EdgeList out;
    bits_.for_each([&](std::size_t i) { out.push_back(host.edge(static_cast<int>(i))); });
    return out;
}

namespace named {

Graph path(int n)
{
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle(int n)
{
    EdgeList e;
    for (int i = 0; i < n; ++i)
        e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete(int n)
{
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph(n, e);
}

Graph star(int leaves)
{
    EdgeList e;
    for (int i = 1; i <= leaves; ++i)
        e.push_back({0, i});
    return Graph(leaves + 1, e);
}

Graph empty(int n) { return Graph(n); }

Graph matching_plus_isolated(int p, int q)
{
    EdgeList e;
    for (int i = 0; i < q; ++i)
        e.push_back({2 * i, 2 * i + 1});
    return Graph(p + 2 * q, e);
}

Graph petersen()
{
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(make_edge(i, (i + 1) % 5));
        e.push_back(make_edge(i, i + 5));
        e.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
    }
    return Graph(10, e);
}

} // namespace named

} // namespace sfc
