#include "sfc/above_matching.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"
#include "sfc/matching.hpp"
#include "sfc/pattern.hpp"

namespace sfc {

namespace {

    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    bool meets(const Triangle &t, const Bitset &s)
    {
        return s.test(static_cast<std::size_t>(t[0])) || s.test(static_cast<std::size_t>(t[1])) ||
               s.test(static_cast<std::size_t>(t[2]));
    }

    int shared_vertices(const Triangle &a, const Triangle &b)
    {
        int c = 0;
        for (Vertex u : a)
            c += std::find(b.begin(), b.end(), u) != b.end();
        return c;
    }

    void add_clique_edges(const Graph &g, std::span<const Vertex> vs, EdgeList &out)
    {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j]))
                    out.push_back(make_edge(vs[i], vs[j]));
    }

    void add_triangle(const Triangle &t, EdgeList &out)
    {
        out.push_back(make_edge(t[0], t[1]));
        out.push_back(make_edge(t[0], t[2]));
        out.push_back(make_edge(t[1], t[2]));
    }

    int matching_without(const Graph &g, const Bitset &removed, std::map<Bitset, int> &memo)
    {
        auto it = memo.find(removed);
        if (it != memo.end())
            return it->second;
        const int mu = max_matching(delete_vertices(g, removed).graph).size();
        memo.emplace(removed, mu);
        return mu;
    }

    EdgeList sorted_unique(EdgeList edges)
    {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return edges;
    }

    void check_witness(const Graph &g, const EdgeList &h, const Pattern &f, int k, const char *who)
    {
        if (static_cast<int>(h.size()) < k || !satisfies_closure(g, std::span<const Edge>(h), f))
            throw std::logic_error(std::string(who) + ": reconstructed witness is invalid");
    }

} // namespace

StcCore stc_greedy_core(const Graph &g)
{
    StcCore core;
    core.x = g.vertex_set();
    const auto tris = triangles(g);

    // K4s: a triangle plus a fourth vertex adjacent to all three
    for (bool found = true; found;) {
        found = false;
        for (const auto &t : tris) {
            if (meets(t, core.x))
                continue;
            Bitset common = g.neighbors(t[0]) & g.neighbors(t[1]) & g.neighbors(t[2]);
            common -= core.x;
            const std::size_t d = common.first();
            if (d >= common.size())
                continue;
            std::array<Vertex, 4> q{t[0], t[1], t[2], static_cast<Vertex>(d)};
            for (Vertex v : q)
                core.x.set(static_cast<std::size_t>(v));
            add_clique_edges(g, q, core.a);
            ++core.k4_steps;
            found = true;
            break;
        }
    }

    std::map<Bitset, int> memo;
    for (bool found = true; found;) {
        found = false;
        const int mu = matching_without(g, core.x, memo);
        for (const auto &t : tris) {
            if (meets(t, core.x))
                continue;
            Bitset without = core.x;
            for (Vertex v : t)
                without.set(static_cast<std::size_t>(v));
            if (mu < 3 + matching_without(g, without, memo)) {
                core.x = without;
                add_triangle(t, core.a);
                ++core.triangle_steps;
                found = true;
                break;
            }
        }
    }
    core.a = sorted_unique(std::move(core.a));
    return core;
}

TriangleInventory triangle_inventory(const Graph &g, const Bitset &x, const Bitset &removed)
{
    TriangleInventory inv;
    Bitset near_x = g.vertex_set();
    x.for_each([&](std::size_t v) { near_x |= g.neighbors(static_cast<Vertex>(v)); });
    near_x -= x;

    std::vector<Triangle> alive;
    for (const auto &t : triangles(g))
        if (!meets(t, x) && !meets(t, removed))
            alive.push_back(t);
    std::vector<char> is_near(alive.size());
    for (std::size_t i = 0; i < alive.size(); ++i) {
        is_near[i] = meets(alive[i], near_x);
        if (is_near[i])
            inv.near.push_back(alive[i]);
    }

    auto fail = [](const Triangle &t, const char *what) {
        throw std::logic_error("triangle {" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                               std::to_string(t[2]) + "} " + what);
    };
    std::vector<char> paired(alive.size(), 0);
    for (std::size_t i = 0; i < alive.size(); ++i) {
        if (is_near[i])
            continue;
        std::vector<std::size_t> touching;
        for (std::size_t j = 0; j < alive.size(); ++j)
            if (j != i && shared_vertices(alive[i], alive[j]) > 0)
                touching.push_back(j);
        if (touching.empty()) {
            inv.isolated.push_back(alive[i]);
            continue;
        }
        if (touching.size() != 1 || shared_vertices(alive[i], alive[touching[0]]) != 2)
            fail(alive[i], "meets other triangles in an unexpected way");
        const std::size_t j = touching[0];
        if (is_near[j]) {
            inv.attached.push_back(alive[i]);
        } else if (!paired[i]) {
            paired[i] = paired[j] = 1;
            inv.pairs.push_back({alive[i], alive[j]});
        }
    }
    return inv;
}

namespace {

    // One branch of the search once the near triangles to keep are fixed.
    class StcBranch {
    public:
        StcBranch(const Graph &g, const Bitset &x, std::uint64_t &nodes, std::uint64_t budget)
            : g_(g), x_(x), nodes_(nodes), budget_(budget)
        {
        }

        // 1 found (witness filled), 0 none, -1 budget; rule counts accumulate in rep
        int run(const std::vector<Triangle> &chosen, int k, SolveReport &rep)
        {
            Bitset removed = g_.vertex_set();
            for (const auto &t : chosen)
                for (Vertex v : t)
                    removed.set(static_cast<std::size_t>(v));
            TriangleInventory inv = triangle_inventory(g_, x_, removed);
            const int forced = static_cast<int>(chosen.size() + inv.isolated.size() + inv.attached.size() +
                                                inv.pairs.size());
            const int k_hat = k - 3 * forced;
            rep.fire("near-triangle", static_cast<std::int64_t>(chosen.size()));
            rep.fire("isolated-triangle", static_cast<std::int64_t>(inv.isolated.size()));
            rep.fire("attached-triangle", static_cast<std::int64_t>(inv.attached.size()));
            rep.fire("pair-contraction", static_cast<std::int64_t>(inv.pairs.size()));

            EdgeList fixed;
            for (const auto &t : chosen)
                add_triangle(t, fixed);
            for (const auto &t : inv.isolated)
                add_triangle(t, fixed);
            for (const auto &t : inv.attached)
                add_triangle(t, fixed);
            for (const auto &t : inv.isolated)
                for (Vertex v : t)
                    removed.set(static_cast<std::size_t>(v));
            for (const auto &t : inv.attached)
                for (Vertex v : t)
                    removed.set(static_cast<std::size_t>(v));

            build_contracted(removed, inv.pairs);
            if (k_hat <= 0) {
                finish(fixed, inv.pairs, {}, rep);
                rep.fire("triangles-only");
                return 1;
            }

            tracker_.emplace(hat_, classify(named::path(3)));
            cand_.clear();
            for (int e = 0; e < hat_.num_edges(); ++e) {
                const Edge &ed = hat_.edge(e);
                if (hat_x_.test(static_cast<std::size_t>(ed.u)) || hat_x_.test(static_cast<std::size_t>(ed.v)))
                    cand_.push_back(e);
            }
            // R = hat G - X
            r_graph_ = delete_vertices(hat_, hat_x_);
            r_mu_ = max_matching(r_graph_.graph).size();
            k_hat_ = k_hat;
            const int res = search(0);
            rep.fire("path-edge-removal", rule6_);
            if (res > 0)
                finish(fixed, inv.pairs, found_, rep);
            return res;
        }

    private:
        void build_contracted(const Bitset &removed, const std::vector<std::pair<Triangle, Triangle>> &pairs)
        {
            const int n = g_.num_vertices();
            std::vector<int> map(static_cast<std::size_t>(n), -2);
            pair_tips_.clear();
            for (const auto &[t1, t2] : pairs) {
                std::array<Vertex, 2> tips{};
                for (Vertex v : t1)
                    if (std::find(t2.begin(), t2.end(), v) == t2.end())
                        tips[0] = v;
                for (Vertex v : t2)
                    if (std::find(t1.begin(), t1.end(), v) == t1.end())
                        tips[1] = v;
                for (Vertex v : t1)
                    map[v] = -1;
                for (Vertex v : t2)
                    map[v] = -1;
                pair_tips_.push_back(tips);
            }
            to_original_.clear();
            for (Vertex v = 0; v < n; ++v) {
                if (removed.test(static_cast<std::size_t>(v)) || map[v] == -1)
                    map[v] = -1;
                else {
                    map[v] = static_cast<int>(to_original_.size());
                    to_original_.push_back(v);
                }
            }
            originals_ = static_cast<int>(to_original_.size());
            for (std::size_t p = 0; p < pair_tips_.size(); ++p)
                for (Vertex tip : pair_tips_[p])
                    map[tip] = originals_ + static_cast<int>(p);

            GraphBuilder b(originals_ + static_cast<int>(pairs.size()));
            for (const Edge &e : g_.edges()) {
                const int a = map[e.u], c = map[e.v];
                if (a < 0 || c < 0 || a == c)
                    continue;
                b.add_edge(a, c);
            }
            hat_ = b.build();
            hat_x_ = hat_.vertex_set();
            x_.for_each([&](std::size_t v) { hat_x_.set(static_cast<std::size_t>(map[v])); });
            for (std::size_t p = 0; p < pair_tips_.size(); ++p)
                if (hat_.neighbors(originals_ + static_cast<int>(p)).intersects(hat_x_))
                    throw std::logic_error("contracted vertex is adjacent to the core");
        }

        int search(std::size_t pos)
        {
            if (++nodes_ > budget_)
                return -1;
            const int strong = tracker_->strong_count();
            if (strong + static_cast<int>(cand_.size() - pos) + r_mu_ < k_hat_)
                return 0;
            if (pos == cand_.size())
                return evaluate() ? 1 : 0;
            const int e = cand_[pos];
            if (tracker_->can_add(e)) {
                tracker_->add(e);
                const int r = search(pos + 1);
                tracker_->remove(e);
                if (r != 0)
                    return r;
            }
            return search(pos + 1);
        }

        // Drop R-edges that would leave a strong path through the core, then
        // complete with a maximum matching.
        bool evaluate()
        {
            const EdgeList s = tracker_->strong_edges();
            std::vector<std::vector<Vertex>> strong_x(static_cast<std::size_t>(hat_.num_vertices()));
            for (const Edge &e : s) {
                if (hat_x_.test(static_cast<std::size_t>(e.u)))
                    strong_x[e.v].push_back(e.u);
                if (hat_x_.test(static_cast<std::size_t>(e.v)))
                    strong_x[e.u].push_back(e.v);
            }
            auto blocked = [&](Vertex a, Vertex b) {
                for (Vertex z : strong_x[a])
                    if (!hat_.adjacent(b, z))
                        return true;
                return false;
            };
            EdgeList kept;
            const auto &rg = r_graph_.graph;
            for (const Edge &e : rg.edges()) {
                const Vertex a = r_graph_.to_original[e.u], b = r_graph_.to_original[e.v];
                if (blocked(a, b) || blocked(b, a)) {
                    ++rule6_;
                    continue;
                }
                kept.push_back(e);
            }
            Matching m = max_matching(Graph(rg.num_vertices(), kept));
            if (static_cast<int>(s.size()) + m.size() < k_hat_)
                return false;
            found_ = s;
            for (const Edge &e : m.edges)
                found_.push_back(make_edge(r_graph_.to_original[e.u], r_graph_.to_original[e.v]));
            std::sort(found_.begin(), found_.end());
            check_witness(hat_, found_, classify(named::path(3)), k_hat_, "contracted instance");
            return true;
        }

        // Undo the contractions and collect every strong edge in input ids.
        void finish(EdgeList h, const std::vector<std::pair<Triangle, Triangle>> &pairs, const EdgeList &hat_h,
                    SolveReport &rep)
        {
            std::vector<char> used(pairs.size(), 0);
            auto tip_index = [&](int p, Vertex tip) { return pair_tips_[p][0] == tip ? 0 : 1; };
            for (const Edge &e : hat_h) {
                const bool pu = e.u >= originals_, pv = e.v >= originals_;
                if (!pu && !pv) {
                    h.push_back(make_edge(to_original_[e.u], to_original_[e.v]));
                    continue;
                }
                if (pu && pv) {
                    const int p = e.u - originals_, q = e.v - originals_;
                    bool done = false;
                    for (Vertex a : pair_tips_[p])
                        for (Vertex b : pair_tips_[q])
                            if (!done && g_.adjacent(a, b)) {
                                h.push_back(make_edge(a, b));
                                const auto &pp = pairs[p];
                                const auto &qq = pairs[q];
                                add_triangle(tip_index(p, a) == 0 ? pp.second : pp.first, h);
                                add_triangle(tip_index(q, b) == 0 ? qq.second : qq.first, h);
                                done = true;
                            }
                    if (!done || used[p] || used[q])
                        throw std::logic_error("cannot lift an edge between contracted vertices");
                    used[p] = used[q] = 1;
                    continue;
                }
                const int p = (pu ? e.u : e.v) - originals_;
                const Vertex v = to_original_[pu ? e.v : e.u];
                if (used[p])
                    throw std::logic_error("contracted vertex with two strong edges");
                used[p] = 1;
                const Vertex tip = g_.adjacent(pair_tips_[p][0], v) ? pair_tips_[p][0] : pair_tips_[p][1];
                h.push_back(make_edge(tip, v));
                add_triangle(tip_index(p, tip) == 0 ? pairs[p].second : pairs[p].first, h);
            }
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if (!used[p])
                    add_triangle(pairs[p].first, h);
            rep.witness = sorted_unique(std::move(h));
        }

        const Graph &g_;
        const Bitset &x_;
        std::uint64_t &nodes_;
        std::uint64_t budget_;

        Graph hat_;
        Bitset hat_x_;
        int originals_ = 0;
        std::vector<Vertex> to_original_;
        std::vector<std::array<Vertex, 2>> pair_tips_;
        std::optional<ClosureTracker> tracker_;
        std::vector<int> cand_;
        Relabeled r_graph_;
        int r_mu_ = 0;
        int k_hat_ = 0;
        EdgeList found_;
        std::int64_t rule6_ = 0;
    };

} // namespace

SolveReport solve_stc_maxdeg4(const Graph &g, int k, std::uint64_t budget)
{
    const auto start = Clock::now();
    if (k < 0)
        throw InvalidInput("k must be non-negative");
    if (g.max_degree() > 4)
        throw Unsupported("this algorithm needs maximum degree at most 4 (got " + std::to_string(g.max_degree()) + ")");
    SolveReport rep;
    rep.algorithm = "stc-deg4";
    const Pattern p3 = classify(named::path(3));
    if (k > g.num_edges()) {
        rep.decision = Decision::No;
        rep.trace.push_back("k exceeds the number of edges");
        return rep;
    }
    const Matching mu = max_matching(g);
    const int r = k - mu.size();
    rep.trace.push_back("mu=" + std::to_string(mu.size()) + " r=" + std::to_string(r));
    if (r <= 0) {
        rep.decision = Decision::Yes;
        rep.witness = mu.edges;
        rep.fire("matching-shortcut");
        rep.stats.millis = elapsed_ms(start);
        return rep;
    }

    const StcCore core = stc_greedy_core(g);
    rep.fire("k4-step", core.k4_steps);
    rep.fire("triangle-step", core.triangle_steps);
    if (2 * core.k4_steps + core.triangle_steps >= r) {
        Relabeled rest = delete_vertices(g, core.x);
        EdgeList h = core.a;
        for (const Edge &e : max_matching(rest.graph).edges)
            h.push_back(make_edge(rest.to_original[e.u], rest.to_original[e.v]));
        rep.decision = Decision::Yes;
        rep.witness = sorted_unique(std::move(h));
        check_witness(g, rep.witness, p3, k, "greedy core");
        rep.fire("core-shortcut");
        rep.stats.millis = elapsed_ms(start);
        return rep;
    }

    // size guarantees of the core; violations are reported, never truncated
    Bitset near_x = g.vertex_set();
    core.x.for_each([&](std::size_t v) { near_x |= g.neighbors(static_cast<Vertex>(v)); });
    near_x -= core.x;
    const auto full = triangle_inventory(g, core.x, g.vertex_set());
    const auto xs = static_cast<long long>(core.x.count());
    if (xs > 4LL * r)
        rep.trace.push_back("warning: |X|=" + std::to_string(xs) + " exceeds 4r");
    if (static_cast<long long>(near_x.count()) > 8LL * r)
        rep.trace.push_back("warning: |N(X)|=" + std::to_string(near_x.count()) + " exceeds 8r");
    if (static_cast<long long>(full.near.size()) > 16LL * r)
        rep.trace.push_back("warning: " + std::to_string(full.near.size()) + " near triangles exceed 16r");
    rep.trace.push_back("core |X|=" + std::to_string(xs) + ", near triangles=" + std::to_string(full.near.size()));

    std::uint64_t nodes = 0;
    std::vector<Triangle> chosen;
    const auto &near = full.near;
    // subsets of pairwise disjoint near triangles
    auto branch = [&](auto &&self, std::size_t from) -> int {
        {
            StcBranch b(g, core.x, nodes, budget);
            const int res = b.run(chosen, k, rep);
            if (res != 0)
                return res;
        }
        for (std::size_t i = from; i < near.size(); ++i) {
            bool disjoint = true;
            for (const auto &t : chosen)
                disjoint = disjoint && shared_vertices(t, near[i]) == 0;
            if (!disjoint)
                continue;
            chosen.push_back(near[i]);
            const int res = self(self, i + 1);
            chosen.pop_back();
            if (res != 0)
                return res;
        }
        return 0;
    };
    const int res = branch(branch, 0);
    rep.stats.nodes = nodes;
    if (res > 0) {
        rep.decision = Decision::Yes;
        check_witness(g, rep.witness, p3, k, "max-degree-4 solver");
    } else {
        rep.decision = res == 0 ? Decision::No : Decision::Inconclusive;
    }
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

StarCore star_greedy_core(const Graph &g, const EdgeList &matching)
{
    StarCore core;
    core.x = g.vertex_set();
    const int n = g.num_vertices();
    std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
    for (const Edge &e : matching) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    auto outside = [&](Vertex v) { return !core.x.test(static_cast<std::size_t>(v)); };

    // an unmatched vertex next to a matching edge
    for (bool found = true; found;) {
        found = false;
        for (Vertex v = 0; v < n && !found; ++v) {
            if (mate[v] >= 0 || !outside(v))
                continue;
            for (Vertex x : g.neighbor_list(v)) {
                if (mate[x] < 0 || !outside(x))
                    continue;
                std::array<Vertex, 3> s{v, x, mate[x]};
                for (Vertex w : s)
                    core.x.set(static_cast<std::size_t>(w));
                add_clique_edges(g, s, core.a);
                ++core.steps;
                found = true;
                break;
            }
        }
    }
    // two matching edges joined by some edge
    for (bool found = true; found;) {
        found = false;
        for (std::size_t i = 0; i < matching.size() && !found; ++i) {
            const Edge &e = matching[i];
            if (!outside(e.u))
                continue;
            for (std::size_t j = i + 1; j < matching.size(); ++j) {
                const Edge &f = matching[j];
                if (!outside(f.u))
                    continue;
                if (!g.adjacent(e.u, f.u) && !g.adjacent(e.u, f.v) && !g.adjacent(e.v, f.u) && !g.adjacent(e.v, f.v))
                    continue;
                std::array<Vertex, 4> s{e.u, e.v, f.u, f.v};
                for (Vertex w : s)
                    core.x.set(static_cast<std::size_t>(w));
                add_clique_edges(g, s, core.a);
                ++core.steps;
                found = true;
                break;
            }
        }
    }
    core.a = sorted_unique(std::move(core.a));
    for (const Edge &e : matching)
        if (outside(e.u))
            core.outside.push_back(e);
    return core;
}

namespace {

    class StarSearch {
    public:
        StarSearch(const Graph &g, const Pattern &f, const Bitset &x, const EdgeList &outside_matching, int t,
                   int k, std::uint64_t budget)
            : g_(g), tracker_(g, f), x_(x), cap_(2 * t - 2), k_(k), budget_(budget),
              out_count_(static_cast<std::size_t>(g.num_vertices()), 0)
        {
            // edges inside X first, then edges leaving X
            for (int e = 0; e < g.num_edges(); ++e) {
                const Edge &ed = g.edge(e);
                const bool a = x.test(static_cast<std::size_t>(ed.u)), b = x.test(static_cast<std::size_t>(ed.v));
                if (a && b)
                    cand_.push_back(e);
            }
            for (int e = 0; e < g.num_edges(); ++e) {
                const Edge &ed = g.edge(e);
                const bool a = x.test(static_cast<std::size_t>(ed.u)), b = x.test(static_cast<std::size_t>(ed.v));
                if (a != b)
                    cand_.push_back(e);
            }
            for (const Edge &e : outside_matching)
                matching_.push_back(g.edge_index(e.u, e.v));
        }

        int run() { return search(0); }
        const EdgeList &witness() const noexcept { return witness_; }
        std::uint64_t nodes() const noexcept { return nodes_; }
        std::int64_t capped() const noexcept { return capped_; }

    private:
        int search(std::size_t pos)
        {
            if (++nodes_ > budget_)
                return -1;
            const int strong = tracker_.strong_count();
            if (strong + static_cast<int>(cand_.size() - pos) + static_cast<int>(matching_.size()) < k_)
                return 0;
            if (pos == cand_.size())
                return evaluate() ? 1 : 0;
            const int e = cand_[pos];
            const Edge &ed = g_.edge(e);
            // the core endpoint of an edge leaving X
            Vertex hub = -1;
            if (x_.test(static_cast<std::size_t>(ed.u)) != x_.test(static_cast<std::size_t>(ed.v)))
                hub = x_.test(static_cast<std::size_t>(ed.u)) ? ed.u : ed.v;
            if (hub >= 0 && out_count_[hub] >= cap_)
                ++capped_;
            else if (tracker_.can_add(e)) {
                tracker_.add(e);
                if (hub >= 0)
                    ++out_count_[hub];
                const int r = search(pos + 1);
                if (hub >= 0)
                    --out_count_[hub];
                tracker_.remove(e);
                if (r != 0)
                    return r;
            }
            return search(pos + 1);
        }

        bool evaluate()
        {
            std::vector<int> addable;
            for (int e : matching_)
                if (tracker_.can_add(e))
                    addable.push_back(e);
            if (tracker_.strong_count() + static_cast<int>(addable.size()) < k_)
                return false;
            witness_ = tracker_.strong_edges();
            for (int e : addable)
                witness_.push_back(g_.edge(e));
            std::sort(witness_.begin(), witness_.end());
            return true;
        }

        const Graph &g_;
        ClosureTracker tracker_;
        const Bitset &x_;
        int cap_;
        int k_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::int64_t capped_ = 0;
        std::vector<int> cand_;
        std::vector<int> matching_;
        std::vector<int> out_count_;
        EdgeList witness_;
    };

} // namespace

SolveReport solve_star_above_matching(const Graph &g, int t, int k, std::uint64_t budget)
{
    const auto start = Clock::now();
    if (t < 3)
        throw Unsupported("star pattern needs t >= 3");
    if (k < 0)
        throw InvalidInput("k must be non-negative");
    if (t + 1 > max_pattern_vertices)
        throw ResourceLimit("star pattern exceeds the vertex limit");
    SolveReport rep;
    rep.algorithm = "star-above-matching";
    const Pattern star = classify(named::star(t));
    if (k > g.num_edges()) {
        rep.decision = Decision::No;
        rep.trace.push_back("k exceeds the number of edges");
        return rep;
    }
    const Matching mu = max_matching(g);
    const int r = k - mu.size();
    rep.trace.push_back("mu=" + std::to_string(mu.size()) + " r=" + std::to_string(r));
    if (r <= 0) {
        rep.decision = Decision::Yes;
        rep.witness = mu.edges;
        rep.fire("matching-shortcut");
        rep.stats.millis = elapsed_ms(start);
        return rep;
    }

    const StarCore core = star_greedy_core(g, mu.edges);
    rep.fire("greedy-step", core.steps);
    if (core.steps >= r) {
        EdgeList h = core.a;
        h.insert(h.end(), core.outside.begin(), core.outside.end());
        rep.decision = Decision::Yes;
        rep.witness = sorted_unique(std::move(h));
        check_witness(g, rep.witness, star, k, "star core");
        rep.fire("core-shortcut");
        rep.stats.millis = elapsed_ms(start);
        return rep;
    }

    // G - X is the outside matching plus isolated vertices
    Bitset matched_out = g.vertex_set();
    for (const Edge &e : core.outside) {
        matched_out.set(static_cast<std::size_t>(e.u));
        matched_out.set(static_cast<std::size_t>(e.v));
    }
    for (const Edge &e : g.edges()) {
        if (core.x.test(static_cast<std::size_t>(e.u)) || core.x.test(static_cast<std::size_t>(e.v)))
            continue;
        if (!std::binary_search(core.outside.begin(), core.outside.end(), e))
            throw std::logic_error("outside matching is not induced");
    }
    if (static_cast<long long>(core.x.count()) >= 4LL * r)
        rep.trace.push_back("warning: |X| is not below 4r");

    // classes of outside matching edges by their endpoints' neighbourhoods in X
    std::map<std::pair<Bitset, Bitset>, std::vector<Edge>> classes;
    for (const Edge &e : core.outside) {
        Bitset a = g.neighbors(e.u) & core.x, b = g.neighbors(e.v) & core.x;
        if (b < a)
            std::swap(a, b);
        classes[{a, b}].push_back(e);
    }
    const std::size_t threshold = static_cast<std::size_t>(2 * t - 2) * 4 * static_cast<std::size_t>(r) + 1;
    Bitset drop = g.vertex_set();
    EdgeList forced;
    for (auto &[key, edges] : classes)
        while (edges.size() >= threshold) {
            forced.push_back(edges.back());
            drop.set(static_cast<std::size_t>(edges.back().u));
            drop.set(static_cast<std::size_t>(edges.back().v));
            edges.pop_back();
        }
    rep.fire("class-edge-removal", static_cast<std::int64_t>(forced.size()));
    const int k_hat = k - static_cast<int>(forced.size());

    Relabeled red = delete_vertices(g, drop);
    std::vector<int> to_new(static_cast<std::size_t>(g.num_vertices()), -1);
    for (std::size_t i = 0; i < red.to_original.size(); ++i)
        to_new[red.to_original[i]] = static_cast<int>(i);
    Bitset x_new = red.graph.vertex_set();
    core.x.for_each([&](std::size_t v) { x_new.set(static_cast<std::size_t>(to_new[v])); });
    EdgeList outside_new;
    for (const Edge &e : core.outside)
        if (to_new[e.u] >= 0)
            outside_new.push_back(make_edge(to_new[e.u], to_new[e.v]));
    rep.trace.push_back("reduced graph has " + std::to_string(red.graph.num_vertices()) + " vertices");

    StarSearch search(red.graph, star, x_new, outside_new, t, k_hat, budget);
    const int res = search.run();
    rep.stats.nodes = search.nodes();
    rep.fire("degree-cap", search.capped());
    if (res > 0) {
        EdgeList h = lift_edges(search.witness(), red.to_original);
        h.insert(h.end(), forced.begin(), forced.end());
        rep.witness = sorted_unique(std::move(h));
        rep.decision = Decision::Yes;
        check_witness(g, rep.witness, star, k, "star solver");
    } else {
        rep.decision = res == 0 ? Decision::No : Decision::Inconclusive;
    }
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

} // namespace sfc
