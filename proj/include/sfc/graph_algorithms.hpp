#pragma once

#include <array>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

using VertexClasses = std::vector<std::vector<Vertex>>;

/// Classes of vertices with identical open neighbourhoods (false twins).
/// Every vertex appears in exactly one class; classes and members are sorted
/// by vertex id.
VertexClasses false_twin_classes(const Graph &g);

/// Classes of vertices with identical closed neighbourhoods; only classes of
/// size >= 2 are returned.
VertexClasses true_twin_classes(const Graph &g);

/// Smallest d such that minimum-degree peeling never removes a vertex of degree > d.
int degeneracy(const Graph &g);

/// Connected components ordered by their minimum vertex.
VertexClasses components(const Graph &g);

/// All triangles as sorted triples, lexicographically ordered.
std::vector<std::array<Vertex, 3>> triangles(const Graph &g);

bool has_independent_set(const Graph &g, const Bitset &within, int size);

} // namespace sfc
