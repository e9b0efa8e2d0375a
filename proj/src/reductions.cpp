#include "sfc/reductions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"

namespace sfc {

namespace {

    void check_set_packing(const SetPackingInstance &inst)
    {
        if (inst.t < 1)
            throw InvalidInput("set packing needs a nonempty universe");
        if (inst.k < 0)
            throw InvalidInput("set packing target must be non-negative");
        for (const auto &s : inst.sets) {
            if (s.empty())
                throw InvalidInput("set packing sets must be nonempty");
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] < 0 || s[i] >= inst.t)
                    throw InvalidInput("set element " + std::to_string(s[i] + 1) + " outside the universe");
                if (i > 0 && s[i - 1] >= s[i])
                    throw InvalidInput("set elements must be sorted and distinct");
            }
        }
    }

    void check_x3c(const X3CInstance &inst)
    {
        if (inst.q < 1)
            throw InvalidInput("X3C needs q >= 1");
        for (const auto &tr : inst.triplets) {
            for (int x : tr)
                if (x < 0 || x >= 3 * inst.q)
                    throw InvalidInput("triplet element " + std::to_string(x + 1) + " outside the ground set");
            if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2])
                throw InvalidInput("triplet with a repeated element");
        }
    }

    // Whitespace-separated integer lines; blank lines and `c` comments skipped.
    class LineReader {
    public:
        explicit LineReader(std::string_view text) : in_(std::string(text)) {}

        bool next(std::vector<long long> &out)
        {
            std::string line;
            while (std::getline(in_, line)) {
                ++line_no_;
                std::istringstream ls(line);
                std::string tok;
                if (!(ls >> tok) || tok == "c")
                    continue;
                out.clear();
                do {
                    std::size_t used = 0;
                    long long v = 0;
                    try {
                        v = std::stoll(tok, &used);
                    } catch (const std::exception &) {
                        used = 0;
                    }
                    if (used != tok.size())
                        throw ParseError(line_no_, "'" + tok + "' is not an integer");
                    out.push_back(v);
                } while (ls >> tok);
                return true;
            }
            return false;
        }

        int line() const noexcept { return line_no_; }

    private:
        std::istringstream in_;
        int line_no_ = 0;
    };

} // namespace

SplitReduction gen_split_from_set_packing(const SetPackingInstance &inst)
{
    check_set_packing(inst);
    if ((inst.k + inst.t) % 2 != 0)
        throw InvalidInput("k + t must be even; pad the universe with one unused element");
    const int t = inst.t, p = static_cast<int>(inst.sets.size());
    SplitReduction out;
    auto &lay = out.layout;
    for (int i = 0; i < t; ++i) {
        lay.u.push_back(i);
        lay.y.push_back(t + i);
        lay.x.push_back(2 * t + i);
    }
    for (int j = 0; j < p; ++j)
        lay.w.push_back(3 * t + j);

    GraphBuilder b(3 * t + p);
    std::vector<Vertex> clique = lay.u;
    clique.insert(clique.end(), lay.y.begin(), lay.y.end());
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            b.add_edge(clique[i], clique[j]);
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < t; ++i)
            if (!std::binary_search(inst.sets[j].begin(), inst.sets[j].end(), i))
                b.add_edge(lay.w[j], lay.u[i]);
        for (Vertex y : lay.y)
            b.add_edge(lay.w[j], y);
    }
    for (int i = 0; i < t; ++i) {
        for (Vertex u : lay.u)
            b.add_edge(lay.x[i], u);
        for (int j = 0; j < t; ++j)
            if (j != i)
                b.add_edge(lay.x[i], lay.y[j]);
    }
    out.graph = b.build();
    out.k = (2 * t) * (2 * t - 1) / 2 + (inst.k + t) / 2;
    return out;
}

SetPackingInstance pad_universe(SetPackingInstance inst)
{
    ++inst.t;
    return inst;
}

bool is_split_partition(const Graph &g, const std::vector<Vertex> &clique, const std::vector<Vertex> &independent)
{
    if (static_cast<int>(clique.size() + independent.size()) != g.num_vertices())
        return false;
    Bitset seen = g.vertex_set();
    for (const auto *part : {&clique, &independent})
        for (Vertex v : *part) {
            if (v < 0 || v >= g.num_vertices() || seen.test(static_cast<std::size_t>(v)))
                return false;
            seen.set(static_cast<std::size_t>(v));
        }
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.adjacent(clique[i], clique[j]))
                return false;
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (std::size_t j = i + 1; j < independent.size(); ++j)
            if (g.adjacent(independent[i], independent[j]))
                return false;
    return true;
}

bool has_set_packing(const SetPackingInstance &inst)
{
    check_set_packing(inst);
    const std::size_t p = inst.sets.size();
    if (p > 25)
        throw ResourceLimit("brute-force set packing is limited to 25 sets");
    std::vector<Bitset> masks;
    for (const auto &s : inst.sets) {
        Bitset m(static_cast<std::size_t>(inst.t));
        for (int x : s)
            m.set(static_cast<std::size_t>(x));
        masks.push_back(std::move(m));
    }
    for (std::uint32_t sub = 0; sub < (1U << p); ++sub) {
        if (std::popcount(sub) < inst.k)
            continue;
        Bitset used(static_cast<std::size_t>(inst.t));
        bool ok = true;
        for (std::size_t i = 0; i < p && ok; ++i)
            if (sub >> i & 1U) {
                ok = !used.intersects(masks[i]);
                used |= masks[i];
            }
        if (ok)
            return true;
    }
    return false;
}

Graph x3c_incidence_graph(const X3CInstance &inst)
{
    check_x3c(inst);
    const int n = 3 * inst.q;
    GraphBuilder b(n + static_cast<int>(inst.triplets.size()));
    for (std::size_t i = 0; i < inst.triplets.size(); ++i)
        for (int x : inst.triplets[i])
            b.add_edge(x, n + static_cast<int>(i));
    return b.build();
}

PlanarReduction gen_planar_from_x3c(const X3CInstance &inst)
{
    const Graph incidence = x3c_incidence_graph(inst);
    if (!is_planar(incidence))
        throw InvalidInput("the element/triplet incidence graph is not planar");
    const int n = 3 * inst.q;
    // per triplet: three middle vertices, then a,b for each of its elements
    GraphBuilder b(n + 9 * static_cast<int>(inst.triplets.size()));
    for (std::size_t i = 0; i < inst.triplets.size(); ++i) {
        const int base = n + 9 * static_cast<int>(i);
        for (int j = 0; j < 3; ++j) {
            const Vertex mid = base + j, a = base + 3 + 2 * j, bb = base + 4 + 2 * j;
            const Vertex x = inst.triplets[i][j];
            b.add_edge(mid, base + (j + 1) % 3);
            b.add_edge(mid, a);
            b.add_edge(mid, bb);
            b.add_edge(a, bb);
            b.add_edge(a, x);
            b.add_edge(bb, x);
        }
    }
    PlanarReduction out;
    out.graph = b.build();
    out.target = 9 * static_cast<int>(inst.triplets.size()) + 3 * inst.q;
    if (!is_planar(out.graph))
        throw std::logic_error("planar gadget construction produced a non-planar graph");
    return out;
}

bool has_exact_cover(const X3CInstance &inst)
{
    check_x3c(inst);
    const std::size_t m = inst.triplets.size();
    if (m > 25)
        throw ResourceLimit("brute-force exact cover is limited to 25 triplets");
    for (std::uint32_t sub = 0; sub < (1U << m); ++sub) {
        if (std::popcount(sub) != inst.q)
            continue;
        Bitset used(static_cast<std::size_t>(3 * inst.q));
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            if (sub >> i & 1U)
                for (int x : inst.triplets[i]) {
                    ok = ok && !used.test(static_cast<std::size_t>(x));
                    used.set(static_cast<std::size_t>(x));
                }
        if (ok)
            return true;
    }
    return false;
}

bool is_planar(const Graph &g)
{
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(static_cast<std::size_t>(g.num_vertices()));
    for (const Edge &e : g.edges())
        boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

Graph gen_pk1k2_from_independent_set(const Graph &g, int p)
{
    if (p < 1)
        throw InvalidInput("p must be at least 1");
    // centres 0 and 1, leaves after them
    GraphBuilder q(2 * p + 2);
    q.add_edge(0, 1);
    for (int i = 0; i < p; ++i) {
        q.add_edge(0, 2 + i);
        q.add_edge(1, 2 + p + i);
    }
    return disjoint_union(g, q.build());
}

bool twins_agree(const Graph &g, const EdgeList &h)
{
    const EdgeSet strong = EdgeSet::from_edges(g, h);
    auto is_strong = [&](Vertex a, Vertex b) { return strong.contains(g.edge_index(a, b)); };
    for (const auto &cls : true_twin_classes(g))
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j) {
                const Vertex x = cls[i], y = cls[j];
                if (!is_strong(x, y))
                    return false;
                for (Vertex u : g.neighbor_list(x))
                    if (u != y && is_strong(x, u) != is_strong(y, u))
                        return false;
            }
    return true;
}

SetPackingInstance parse_set_packing(std::string_view text)
{
    LineReader r(text);
    std::vector<long long> row;
    if (!r.next(row))
        throw ParseError(r.line(), "missing header 't p k'");
    if (row.size() != 3 || row[0] < 1 || row[1] < 0 || row[2] < 0 || row[0] > 1'000'000 || row[1] > 1'000'000)
        throw ParseError(r.line(), "malformed header, expected 't p k'");
    SetPackingInstance inst;
    inst.t = static_cast<int>(row[0]);
    inst.k = static_cast<int>(row[2]);
    const auto p = static_cast<std::size_t>(row[1]);
    while (inst.sets.size() < p) {
        if (!r.next(row))
            throw ParseError(r.line(), "expected " + std::to_string(p) + " sets, found " +
                                           std::to_string(inst.sets.size()));
        std::vector<int> s;
        for (long long v : row) {
            if (v < 1 || v > inst.t)
                throw ParseError(r.line(), "element " + std::to_string(v) + " outside the universe");
            s.push_back(static_cast<int>(v - 1));
        }
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError(r.line(), "repeated element in a set");
        inst.sets.push_back(std::move(s));
    }
    if (r.next(row))
        throw ParseError(r.line(), "unexpected extra line");
    check_set_packing(inst);
    return inst;
}

std::string serialize_set_packing(const SetPackingInstance &inst)
{
    std::ostringstream out;
    out << inst.t << ' ' << inst.sets.size() << ' ' << inst.k << '\n';
    for (const auto &s : inst.sets) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << s[i] + 1;
        out << '\n';
    }
    return out.str();
}

X3CInstance parse_x3c(std::string_view text)
{
    LineReader r(text);
    std::vector<long long> row;
    if (!r.next(row))
        throw ParseError(r.line(), "missing header 'q m'");
    if (row.size() != 2 || row[0] < 1 || row[1] < 0 || row[0] > 1'000'000 || row[1] > 1'000'000)
        throw ParseError(r.line(), "malformed header, expected 'q m'");
    X3CInstance inst;
    inst.q = static_cast<int>(row[0]);
    const auto m = static_cast<std::size_t>(row[1]);
    while (inst.triplets.size() < m) {
        if (!r.next(row))
            throw ParseError(r.line(), "expected " + std::to_string(m) + " triplets, found " +
                                           std::to_string(inst.triplets.size()));
        if (row.size() != 3)
            throw ParseError(r.line(), "a triplet needs exactly three elements");
        std::array<int, 3> tr{};
        for (int i = 0; i < 3; ++i) {
            if (row[i] < 1 || row[i] > 3LL * inst.q)
                throw ParseError(r.line(), "element " + std::to_string(row[i]) + " outside the ground set");
            tr[i] = static_cast<int>(row[i] - 1);
        }
        if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2])
            throw ParseError(r.line(), "triplet with a repeated element");
        inst.triplets.push_back(tr);
    }
    if (r.next(row))
        throw ParseError(r.line(), "unexpected extra line");
    return inst;
}

std::string serialize_x3c(const X3CInstance &inst)
{
    std::ostringstream out;
    out << inst.q << ' ' << inst.triplets.size() << '\n';
    for (const auto &tr : inst.triplets)
        out << tr[0] + 1 << ' ' << tr[1] + 1 << ' ' << tr[2] + 1 << '\n';
    return out.str();
}

} // namespace sfc
