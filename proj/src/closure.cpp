#include "sfc/closure.hpp"

#include <algorithm>
#include <set>

#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"

namespace sfc {

namespace {

    class FGraphSearch {
    public:
        FGraphSearch(const Graph &g, const EdgeSet &h, const Pattern &f, std::size_t limit)
            : g_(g), f_(f.graph), limit_(limit), image_(static_cast<std::size_t>(f.num_vertices()), -1),
              used_(g.vertex_set())
        {
            h_adj_.assign(static_cast<std::size_t>(g.num_vertices()), g.vertex_set());
            h.bits().for_each([&](std::size_t i) {
                const Edge &e = g.edge(static_cast<int>(i));
                h_adj_[e.u].set(static_cast<std::size_t>(e.v));
                h_adj_[e.v].set(static_cast<std::size_t>(e.u));
            });
            plan();
        }

        std::vector<FGraphWitness> run()
        {
            if (f_.num_vertices() <= g_.num_vertices())
                extend(0);
            std::vector<FGraphWitness> out;
            out.reserve(found_.size());
            for (auto &s : found_)
                out.push_back({s});
            return out;
        }

    private:
        // Order F's vertices so each one is attached to as many earlier ones as
        // possible; record the previous member of its twin class for symmetry breaking.
        void plan()
        {
            const int k = f_.num_vertices();
            std::vector<char> placed(static_cast<std::size_t>(k), 0);
            for (int step = 0; step < k; ++step) {
                int best = -1, best_links = -1;
                for (int v = 0; v < k; ++v) {
                    if (placed[v])
                        continue;
                    int links = 0;
                    for (int w : f_.neighbor_list(v))
                        links += placed[w];
                    if (best < 0 || links > best_links || (links == best_links && f_.degree(v) > f_.degree(best))) {
                        best = v;
                        best_links = links;
                    }
                }
                placed[best] = 1;
                order_.push_back(best);
            }
            twin_prev_.assign(static_cast<std::size_t>(k), -1);
            anchor_.assign(static_cast<std::size_t>(k), -1);
            std::vector<int> class_of(static_cast<std::size_t>(k), -1);
            int cid = 0;
            for (const auto &cls : false_twin_classes(f_)) {
                for (int v : cls)
                    class_of[v] = cid;
                ++cid;
            }
            for (const auto &cls : true_twin_classes(f_)) {
                for (int v : cls)
                    class_of[v] = cid;
                ++cid;
            }
            for (int pos = 0; pos < k; ++pos) {
                const int v = order_[pos];
                for (int prev = pos - 1; prev >= 0; --prev) {
                    if (class_of[order_[prev]] == class_of[v] && twin_prev_[v] < 0)
                        twin_prev_[v] = order_[prev];
                    if (anchor_[v] < 0 && f_.adjacent(order_[prev], v))
                        anchor_[v] = order_[prev];
                }
            }
        }

        bool extend(std::size_t pos)
        {
            if (found_.size() >= limit_)
                return true;
            if (pos == order_.size()) {
                std::vector<Vertex> s;
                s.reserve(image_.size());
                for (int v : image_)
                    s.push_back(v);
                std::sort(s.begin(), s.end());
                found_.insert(std::move(s));
                return found_.size() >= limit_;
            }
            const int fv = order_[pos];
            const int anchor = anchor_[fv];
            Bitset cand = anchor >= 0 ? h_adj_[image_[anchor]] : all_vertices();
            cand -= used_;
            const int lower = twin_prev_[fv] >= 0 ? image_[twin_prev_[fv]] : -1;
            for (std::size_t w = cand.next(static_cast<std::size_t>(lower + 1)); w < cand.size(); w = cand.next(w + 1)) {
                const Vertex gv = static_cast<Vertex>(w);
                bool ok = true;
                for (std::size_t i = 0; i < pos && ok; ++i) {
                    const int fu = order_[i];
                    const Vertex gu = image_[fu];
                    if (f_.adjacent(fu, fv))
                        ok = h_adj_[gu].test(w);
                    else
                        ok = !g_.adjacent(gu, gv);
                }
                if (!ok)
                    continue;
                image_[fv] = gv;
                used_.set(w);
                const bool done = extend(pos + 1);
                used_.reset(w);
                image_[fv] = -1;
                if (done)
                    return true;
            }
            return false;
        }

        Bitset all_vertices() const
        {
            Bitset b = g_.vertex_set();
            b.set_all();
            return b;
        }

        const Graph &g_;
        const Graph &f_;
        std::size_t limit_;
        std::vector<Bitset> h_adj_;
        std::vector<int> order_;
        std::vector<int> twin_prev_;
        std::vector<int> anchor_;
        std::vector<Vertex> image_;
        Bitset used_;
        std::set<std::vector<Vertex>> found_;
    };

} // namespace

std::vector<FGraphWitness> enumerate_f_graphs(const Graph &g, const EdgeSet &h, const Pattern &f, std::size_t limit)
{
    if (f.num_vertices() > max_pattern_vertices)
        throw ResourceLimit("pattern exceeds the vertex limit");
    if (h.bits().size() != static_cast<std::size_t>(g.num_edges()))
        throw InvalidInput("edge set does not belong to this graph");
    if (limit == 0)
        return {};
    return FGraphSearch(g, h, f, limit).run();
}

bool satisfies_closure(const Graph &g, const EdgeSet &h, const Pattern &f)
{
    return enumerate_f_graphs(g, h, f, 1).empty();
}

bool satisfies_closure(const Graph &g, std::span<const Edge> h, const Pattern &f)
{
    return satisfies_closure(g, EdgeSet::from_edges(g, h), f);
}

std::vector<FCopy> induced_copies(const Graph &g, const Pattern &f)
{
    std::vector<FCopy> out;
    for (auto &w : enumerate_f_graphs(g, EdgeSet::all(g), f)) {
        FCopy c;
        c.vertices = std::move(w.vertices);
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
                const int idx = g.edge_index(c.vertices[i], c.vertices[j]);
                if (idx >= 0)
                    c.edges.push_back(idx);
            }
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
    }
    return out;
}

ClosureTracker::ClosureTracker(const Graph &g, const Pattern &f)
    : g_(&g), copies_(induced_copies(g, f)), by_edge_(static_cast<std::size_t>(g.num_edges())),
      strong_in_copy_(copies_.size(), 0), strong_(static_cast<std::size_t>(g.num_edges()), 0)
{
    for (std::size_t c = 0; c < copies_.size(); ++c) {
        if (copies_[c].edges.empty())
            unbreakable_ = true;
        for (int e : copies_[c].edges)
            by_edge_[e].push_back(static_cast<int>(c));
    }
}

bool ClosureTracker::can_add(int e) const noexcept
{
    for (int c : by_edge_[e])
        if (strong_in_copy_[c] + 1 == static_cast<int>(copies_[c].edges.size()))
            return false;
    return true;
}

void ClosureTracker::add(int e) noexcept
{
    strong_[e] = 1;
    ++strong_count_;
    for (int c : by_edge_[e])
        ++strong_in_copy_[c];
}

void ClosureTracker::remove(int e) noexcept
{
    strong_[e] = 0;
    --strong_count_;
    for (int c : by_edge_[e])
        --strong_in_copy_[c];
}

void ClosureTracker::clear() noexcept
{
    std::fill(strong_.begin(), strong_.end(), 0);
    std::fill(strong_in_copy_.begin(), strong_in_copy_.end(), 0);
    strong_count_ = 0;
}

EdgeList ClosureTracker::strong_edges() const
{
    EdgeList out;
    for (int e = 0; e < g_->num_edges(); ++e)
        if (strong_[e])
            out.push_back(g_->edge(e));
    return out;
}

} // namespace sfc
