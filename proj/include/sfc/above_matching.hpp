#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sfc/graph.hpp"
#include "sfc/report.hpp"

namespace sfc {

using Triangle = std::array<Vertex, 3>;

/// Greedy core for triadic closure on max-degree-4 graphs: K4s of G - X are
/// absorbed first, then triangles T with mu(G-X) < 3 + mu(G-X-T).
struct StcCore {
    Bitset x;
    EdgeList a; ///< all edges inside the absorbed cliques
    int k4_steps = 0;
    int triangle_steps = 0;
};

StcCore stc_greedy_core(const Graph &g);

/// Triangles of G - X - removed, sorted by their distance to X.
struct TriangleInventory {
    std::vector<Triangle> near;     ///< some vertex adjacent to X
    std::vector<Triangle> isolated; ///< distance >= 2, meets no other triangle
    std::vector<Triangle> attached; ///< distance >= 2, shares an edge with a near triangle
    std::vector<std::pair<Triangle, Triangle>> pairs; ///< remaining distance >= 2 triangles, two per shared edge
};

/// Throws std::logic_error if the remaining far triangles do not pair up
/// (cannot happen after the greedy core on a max-degree-4 graph).
TriangleInventory triangle_inventory(const Graph &g, const Bitset &x, const Bitset &removed);

/// Triadic closure (F = P3) on graphs with maximum degree <= 4, parameterized
/// by r = k - mu(G). Throws Unsupported for larger degree.
SolveReport solve_stc_maxdeg4(const Graph &g, int k, std::uint64_t budget = default_node_budget);

/// Greedy core for the K_{1,t} algorithm, starting from a maximum matching.
struct StarCore {
    Bitset x;
    EdgeList a;
    int steps = 0;
    EdgeList outside; ///< matching edges with both ends outside X (an induced matching)
};

StarCore star_greedy_core(const Graph &g, const EdgeList &matching);

/// Strong K_{1,t}-closure for t >= 3, parameterized by r = k - mu(G).
SolveReport solve_star_above_matching(const Graph &g, int t, int k, std::uint64_t budget = default_node_budget);

} // namespace sfc
