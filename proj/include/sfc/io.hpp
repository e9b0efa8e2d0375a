#pragma once

#include <string>
#include <string_view>

#include "sfc/graph.hpp"

namespace sfc {

/// DIMACS-like graph text: `p <n> <m>` header, `e <u> <v>` lines with 1-based
/// vertices, `c ...` comments. Throws ParseError carrying the offending line.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph; edges in lexicographic order.
std::string serialize_graph(const Graph &g, std::string_view comment = {});

Graph read_graph_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);
std::string read_text_file(const std::string &path);

} // namespace sfc
