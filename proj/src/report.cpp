#include "sfc/report.hpp"

#include <algorithm>

namespace sfc {

std::string_view to_string(Decision d)
{
    switch (d) {
    case Decision::Yes:
        return "yes";
    case Decision::No:
        return "no";
    case Decision::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

EdgeList lift_edges(const EdgeList &edges, const std::vector<Vertex> &to_original)
{
    EdgeList out;
    out.reserve(edges.size());
    for (const auto &e : edges)
        out.push_back(make_edge(to_original[e.u], to_original[e.v]));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sfc
