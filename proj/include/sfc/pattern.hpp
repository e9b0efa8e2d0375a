#pragma once

#include <string>
#include <string_view>

#include "sfc/graph.hpp"

namespace sfc {

inline constexpr int max_pattern_vertices = 10;

/// Structural class of a pattern F; drives algorithm dispatch.
enum class PatternClass {
    PK1,         ///< p isolated vertices, no edges
    PK1_K2,      ///< p isolated vertices plus a single edge (p >= 0)
    PK1_QK2,     ///< p isolated vertices plus q >= 2 disjoint edges
    BigComponent ///< some component has at least 3 vertices
};

std::string_view to_string(PatternClass c);

struct Pattern {
    Graph graph;
    PatternClass cls = PatternClass::PK1;
    int isolated = 0;            ///< p
    int k2_components = 0;       ///< q
    bool has_big_component = false;
    std::string name;

    int num_vertices() const noexcept { return graph.num_vertices(); }
    int num_edges() const noexcept { return graph.num_edges(); }
};

/// Classify by component census. Throws InvalidInput for an empty pattern and
/// ResourceLimit above max_pattern_vertices.
Pattern classify(const Graph &f, std::string name = {});

/// Pattern grammar: P3, pK1:<p>, qK2:<q>, pK1qK2:<p>,<q>, K1t:<t>, file:<path>;
/// also P<n>, C<n>, K<n> for paths, cycles and cliques.
Pattern parse_pattern(std::string_view spec);

/// Exact isomorphism test by backtracking with degree pruning. Both graphs
/// must have at most max_pattern_vertices vertices (ResourceLimit otherwise).
bool isomorphic(const Graph &a, const Graph &b);

} // namespace sfc
