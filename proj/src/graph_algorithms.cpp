#include "sfc/graph_algorithms.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace sfc {

VertexClasses false_twin_classes(const Graph &g)
{
    // identical open neighbourhoods already force non-adjacency (no loops)
    std::map<Bitset, std::vector<Vertex>> by_nbhd;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        by_nbhd[g.neighbors(v)].push_back(v);
    VertexClasses out;
    out.reserve(by_nbhd.size());
    for (auto &[_, cls] : by_nbhd)
        out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return out;
}

VertexClasses true_twin_classes(const Graph &g)
{
    std::map<Bitset, std::vector<Vertex>> by_nbhd;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        Bitset closed = g.neighbors(v);
        closed.set(static_cast<std::size_t>(v));
        by_nbhd[closed].push_back(v);
    }
    VertexClasses out;
    for (auto &[_, cls] : by_nbhd)
        if (cls.size() >= 2)
            out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return out;
}

int degeneracy(const Graph &g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.insert({deg[v], v});
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    int d = 0;
    while (!queue.empty()) {
        auto [dv, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        d = std::max(d, dv);
        for (Vertex w : g.neighbor_list(v)) {
            if (removed[w])
                continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return d;
}

VertexClasses components(const Graph &g)
{
    const int n = g.num_vertices();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    VertexClasses out;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        std::vector<Vertex> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbor_list(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::array<Vertex, 3>> triangles(const Graph &g)
{
    std::vector<std::array<Vertex, 3>> out;
    for (const auto &e : g.edges()) {
        Bitset common = g.neighbors(e.u) & g.neighbors(e.v);
        common.for_each([&](std::size_t w) {
            if (static_cast<Vertex>(w) > e.v)
                out.push_back({e.u, e.v, static_cast<Vertex>(w)});
        });
    }
    return out;
}

namespace {

    bool independent_set_rec(const Graph &g, Bitset within, int size)
    {
        if (size <= 0)
            return true;
        if (static_cast<int>(within.count()) < size)
            return false;
        // pick the vertex of maximum degree inside `within`
        Vertex best = -1;
        std::size_t best_deg = 0;
        within.for_each([&](std::size_t v) {
            std::size_t d = g.neighbors(static_cast<Vertex>(v)).intersection_count(within);
            if (best < 0 || d > best_deg) {
                best = static_cast<Vertex>(v);
                best_deg = d;
            }
        });
        if (best_deg == 0)
            return static_cast<int>(within.count()) >= size;
        Bitset take = within - g.neighbors(best);
        take.reset(static_cast<std::size_t>(best));
        if (independent_set_rec(g, take, size - 1))
            return true;
        within.reset(static_cast<std::size_t>(best));
        return independent_set_rec(g, within, size);
    }

} // namespace

bool has_independent_set(const Graph &g, const Bitset &within, int size) { return independent_set_rec(g, within, size); }

} // namespace sfc
