#include "sfc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "sfc/error.hpp"

namespace sfc {

namespace {

    bool read_int(std::istringstream &in, long long &out)
    {
        if (!(in >> out))
            return false;
        return true;
    }

} // namespace

Graph parse_graph(std::string_view text)
{
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    std::set<std::pair<int, int>> seen;
    EdgeList edges;
    while (std::getline(stream, line)) {
        ++line_no;
        std::istringstream in(line);
        std::string tag;
        if (!(in >> tag) || tag[0] == 'c')
            continue;
        if (tag == "p") {
            if (n >= 0)
                throw ParseError(line_no, "duplicate header");
            if (!read_int(in, n) || !read_int(in, m) || n < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected 'p <n> <m>'");
            std::string extra;
            if (in >> extra)
                throw ParseError(line_no, "malformed header, trailing '" + extra + "'");
            continue;
        }
        if (tag == "e") {
            long long u = 0, v = 0;
            if (!read_int(in, u) || !read_int(in, v))
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            std::string extra;
            if (in >> extra)
                throw ParseError(line_no, "malformed edge line, trailing '" + extra + "'");
            if (u == v)
                throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            if (n < 0)
                throw ParseError(line_no, "edge before 'p' header");
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
            const Edge e = make_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            if (!seen.insert({e.u, e.v}).second)
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            edges.push_back(e);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
    if (n < 0)
        throw ParseError(line_no, "missing 'p <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph &g, std::string_view comment)
{
    std::ostringstream out;
    if (!comment.empty())
        out << "c " << comment << '\n';
    out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto &e : g.edges())
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string read_text_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string &path, const std::string &text)
{
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

Graph read_graph_file(const std::string &path) { return parse_graph(read_text_file(path)); }

} // namespace sfc
