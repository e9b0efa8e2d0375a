#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sfc/graph.hpp"

namespace sfc {

/// Universe {0..t-1}; sets are sorted and nonempty.
struct SetPackingInstance {
    int t = 0;
    std::vector<std::vector<int>> sets;
    int k = 0;
};

/// Vertex blocks of the split graph: U and Y form the clique, X and W the
/// independent set. u[i], y[i], x[i] belong to element i; w[j] to set j.
struct SplitLayout {
    std::vector<Vertex> u, y, x, w;
};

struct SplitReduction {
    Graph graph;
    int k = 0;
    SplitLayout layout;
};

/// Throws InvalidInput on malformed sets and when k + t is odd (see pad_universe).
SplitReduction gen_split_from_set_packing(const SetPackingInstance &inst);

/// One extra element in no set: flips the parity of k + t, packability unchanged.
SetPackingInstance pad_universe(SetPackingInstance inst);

bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique, const std::vector<Vertex> &independent);

/// Brute force over all subfamilies.
bool has_set_packing(const SetPackingInstance &inst);

/// Elements {0..3q-1}.
struct X3CInstance {
    int q = 0;
    std::vector<std::array<int, 3>> triplets;
};

/// Element vertices 0..3q-1, then one vertex per triplet.
Graph x3c_incidence_graph(const X3CInstance &inst);

struct PlanarReduction {
    Graph graph;
    int target = 0; ///< 9m + 3q
};

/// Throws InvalidInput on malformed triplets or a non-planar incidence graph.
PlanarReduction gen_planar_from_x3c(const X3CInstance &inst);

bool has_exact_cover(const X3CInstance &inst);

bool is_planar(const Graph &g);

/// g plus two stars K_{1,p} whose centres are joined.
Graph gen_pk1k2_from_independent_set(const Graph &g, int p);

/// For every true-twin pair x,y: xy is in h and every other neighbour u has
/// xu in h exactly when yu is in h.
bool twins_agree(const Graph &g, const EdgeList &h);

/// `t p k`, then one line of 1-based element ids per set.
SetPackingInstance parse_set_packing(std::string_view text);
std::string serialize_set_packing(const SetPackingInstance &inst);

/// `q m`, then one line of three 1-based element ids per triplet.
X3CInstance parse_x3c(std::string_view text);
std::string serialize_x3c(const X3CInstance &inst);

} // namespace sfc
