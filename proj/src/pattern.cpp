#include "sfc/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"
#include "sfc/io.hpp"

namespace sfc {

std::string_view to_string(PatternClass c)
{
    switch (c) {
    case PatternClass::PK1:
        return "pK1";
    case PatternClass::PK1_K2:
        return "pK1+K2";
    case PatternClass::PK1_QK2:
        return "pK1+qK2";
    case PatternClass::BigComponent:
        return "big-component";
    }
    return "?";
}

Pattern classify(const Graph &f, std::string name)
{
    if (f.num_vertices() < 1)
        throw InvalidInput("pattern must have at least one vertex");
    if (f.num_vertices() > max_pattern_vertices)
        throw ResourceLimit("pattern has " + std::to_string(f.num_vertices()) + " vertices; the limit is " +
                            std::to_string(max_pattern_vertices));
    Pattern p;
    p.graph = f;
    p.name = std::move(name);
    for (const auto &comp : components(f)) {
        if (comp.size() == 1)
            ++p.isolated;
        else if (comp.size() == 2)
            ++p.k2_components;
        else
            p.has_big_component = true;
    }
    if (p.has_big_component)
        p.cls = PatternClass::BigComponent;
    else if (p.k2_components == 0)
        p.cls = PatternClass::PK1;
    else if (p.k2_components == 1)
        p.cls = PatternClass::PK1_K2;
    else
        p.cls = PatternClass::PK1_QK2;
    return p;
}

namespace {

    int parse_int(std::string_view s, std::string_view spec)
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
            throw InvalidInput("bad number '" + std::string(s) + "' in pattern '" + std::string(spec) + "'");
        return value;
    }

} // namespace

Pattern parse_pattern(std::string_view spec)
{
    const std::string name(spec);
    auto after = [&](std::string_view prefix) { return spec.substr(prefix.size()); };
    if (spec.starts_with("file:"))
        return classify(read_graph_file(std::string(after("file:"))), name);
    if (spec.starts_with("pK1qK2:")) {
        auto rest = after("pK1qK2:");
        auto comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw InvalidInput("pattern '" + name + "' needs <p>,<q>");
        int p = parse_int(rest.substr(0, comma), spec);
        int q = parse_int(rest.substr(comma + 1), spec);
        if (p + 2 * q > max_pattern_vertices)
            throw ResourceLimit("pattern '" + name + "' exceeds " + std::to_string(max_pattern_vertices) + " vertices");
        return classify(named::matching_plus_isolated(p, q), name);
    }
    if (spec.starts_with("pK1:")) {
        int p = parse_int(after("pK1:"), spec);
        if (p > max_pattern_vertices)
            throw ResourceLimit("pattern '" + name + "' exceeds " + std::to_string(max_pattern_vertices) + " vertices");
        return classify(named::empty(p), name);
    }
    if (spec.starts_with("qK2:")) {
        int q = parse_int(after("qK2:"), spec);
        if (2 * q > max_pattern_vertices)
            throw ResourceLimit("pattern '" + name + "' exceeds " + std::to_string(max_pattern_vertices) + " vertices");
        return classify(named::matching_plus_isolated(0, q), name);
    }
    if (spec.starts_with("K1t:")) {
        int t = parse_int(after("K1t:"), spec);
        if (t + 1 > max_pattern_vertices)
            throw ResourceLimit("pattern '" + name + "' exceeds " + std::to_string(max_pattern_vertices) + " vertices");
        return classify(named::star(t), name);
    }
    if (spec.size() >= 2 && (spec[0] == 'P' || spec[0] == 'C' || spec[0] == 'K')) {
        int n = parse_int(spec.substr(1), spec);
        if (n > max_pattern_vertices)
            throw ResourceLimit("pattern '" + name + "' exceeds " + std::to_string(max_pattern_vertices) + " vertices");
        if (spec[0] == 'P')
            return classify(named::path(n), name);
        if (spec[0] == 'K')
            return classify(named::complete(n), name);
        if (n < 3)
            throw InvalidInput("cycle pattern needs at least 3 vertices");
        return classify(named::cycle(n), name);
    }
    throw InvalidInput("unknown pattern '" + name + "'");
}

namespace {

    class IsoSearch {
    public:
        IsoSearch(const Graph &a, const Graph &b) : a_(a), b_(b), map_(a.num_vertices(), -1), used_(b.num_vertices(), 0)
        {
            // map high-degree, well-connected vertices first
            const int n = a.num_vertices();
            std::vector<char> placed(n, 0);
            for (int step = 0; step < n; ++step) {
                int best = -1, best_links = -1;
                for (int v = 0; v < n; ++v) {
                    if (placed[v])
                        continue;
                    int links = 0;
                    for (int w : a.neighbor_list(v))
                        links += placed[w];
                    if (best < 0 || links > best_links || (links == best_links && a.degree(v) > a.degree(best))) {
                        best = v;
                        best_links = links;
                    }
                }
                placed[best] = 1;
                order_.push_back(best);
            }
        }

        bool run() { return extend(0); }

    private:
        bool extend(std::size_t pos)
        {
            if (pos == order_.size())
                return true;
            const int v = order_[pos];
            for (int w = 0; w < b_.num_vertices(); ++w) {
                if (used_[w] || b_.degree(w) != a_.degree(v))
                    continue;
                bool ok = true;
                for (std::size_t i = 0; i < pos && ok; ++i) {
                    const int u = order_[i];
                    ok = a_.adjacent(u, v) == b_.adjacent(map_[u], w);
                }
                if (!ok)
                    continue;
                map_[v] = w;
                used_[w] = 1;
                if (extend(pos + 1))
                    return true;
                used_[w] = 0;
                map_[v] = -1;
            }
            return false;
        }

        const Graph &a_;
        const Graph &b_;
        std::vector<int> order_;
        std::vector<int> map_;
        std::vector<char> used_;
    };

    std::vector<int> degree_sequence(const Graph &g)
    {
        std::vector<int> d;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    }

} // namespace

bool isomorphic(const Graph &a, const Graph &b)
{
    if (a.num_vertices() > max_pattern_vertices || b.num_vertices() > max_pattern_vertices)
        throw ResourceLimit("isomorphism test is limited to " + std::to_string(max_pattern_vertices) + " vertices");
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    if (degree_sequence(a) != degree_sequence(b))
        return false;
    return IsoSearch(a, b).run();
}

} // namespace sfc
