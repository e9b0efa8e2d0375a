#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "sfc/closure.hpp"
#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"

namespace sfc::testing {

inline Graph random_gnp(std::mt19937_64 &rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.push_back({u, v});
    return Graph(n, edges);
}

inline Graph random_max_degree(std::mt19937_64 &rng, int n, int max_deg, double p)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<int> deg(n, 0);
    EdgeList edges;
    for (auto [u, v] : pairs)
        if (deg[u] < max_deg && deg[v] < max_deg && coin(rng)) {
            ++deg[u];
            ++deg[v];
            edges.push_back({u, v});
        }
    return Graph(n, edges);
}

/// Triangles, diamonds and K4s with pendant edges, plus random extra edges
/// under the degree cap. Pendants keep many triangles out of the greedy core
/// of the max-degree-4 algorithm, so its later reduction rules get exercised.
inline Graph random_triangle_rich(std::mt19937_64 &rng, int max_n, int max_deg = 4, double extra = 0.1)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<int> deg;
    auto add_vertex = [&] {
        deg.push_back(0);
        return static_cast<Vertex>(deg.size() - 1);
    };
    auto link = [&](Vertex u, Vertex v) {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u))
                return;
        if (u != v && deg[u] < max_deg && deg[v] < max_deg) {
            edges.push_back({u, v});
            ++deg[u];
            ++deg[v];
        }
    };
    std::uniform_int_distribution<int> kind(0, 7);
    std::bernoulli_distribution pendant(0.92);
    while (true) {
        const int k = kind(rng);
        const int size = k < 3 ? 3 : 4; // 0-2 triangle, 3-6 diamond, 7 K4
        if (static_cast<int>(deg.size()) + 2 * size > max_n)
            break;
        std::vector<Vertex> vs;
        for (int i = 0; i < size; ++i)
            vs.push_back(add_vertex());
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (k == 7 || !(i == 0 && j == 3)) // diamond misses one edge
                    link(vs[i], vs[j]);
        for (Vertex v : vs)
            if (pendant(rng))
                link(v, add_vertex());
    }
    while (static_cast<int>(deg.size()) < max_n && std::bernoulli_distribution(0.5)(rng))
        add_vertex();
    const int n = static_cast<int>(deg.size());
    std::bernoulli_distribution coin(extra);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                link(u, v);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeList out;
    for (auto [u, v] : edges)
        out.push_back(make_edge(perm[u], perm[v]));
    return Graph(n, out);
}

/// Maximum feasible number of strong edges by plain subset enumeration.
inline int brute_force_optimum(const Graph &g, const Pattern &f)
{
    const int m = g.num_edges();
    int best = -1;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best)
            continue;
        EdgeSet h(g);
        for (int e = 0; e < m; ++e)
            if (mask >> e & 1u)
                h.insert(e);
        if (satisfies_closure(g, h, f))
            best = size;
    }
    return best;
}

inline int brute_force_matching(const Graph &g)
{
    const int m = g.num_edges();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<char> used(g.num_vertices(), 0);
        bool ok = true;
        for (int e = 0; e < m && ok; ++e)
            if (mask >> e & 1u) {
                const Edge &x = g.edge(e);
                ok = !used[x.u] && !used[x.v];
                used[x.u] = used[x.v] = 1;
            }
        if (ok)
            best = std::max(best, std::popcount(mask));
    }
    return best;
}

/// All graphs on n vertices, one per edge mask (not reduced up to isomorphism).
inline std::vector<Graph> all_graphs(int n)
{
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        EdgeList edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u)
                edges.push_back({pairs[i].first, pairs[i].second});
        out.push_back(Graph(n, edges));
    }
    return out;
}

/// One representative per isomorphism class.
inline std::vector<Graph> graphs_up_to_iso(int n)
{
    std::vector<Graph> reps;
    for (auto &g : all_graphs(n)) {
        bool seen = false;
        for (const auto &r : reps)
            if (isomorphic(g, r)) {
                seen = true;
                break;
            }
        if (!seen)
            reps.push_back(std::move(g));
    }
    return reps;
}

} // namespace sfc::testing
