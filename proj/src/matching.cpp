#include "sfc/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>

#include "sfc/error.hpp"

namespace sfc {

namespace {

    // Edmonds' blossom algorithm with explicit base tracking; one BFS per
    // exposed vertex, contracting odd cycles on the fly.
    class Blossom {
    public:
        explicit Blossom(const Graph &g)
            : g_(g), n_(g.num_vertices()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
        {
        }

        std::vector<int> run()
        {
            // cheap greedy start
            for (const auto &e : g_.edges())
                if (match_[e.u] < 0 && match_[e.v] < 0) {
                    match_[e.u] = e.v;
                    match_[e.v] = e.u;
                }
            for (int v = 0; v < n_; ++v) {
                if (match_[v] >= 0)
                    continue;
                int end = find_path(v);
                while (end >= 0) {
                    int pv = parent_[end];
                    int ppv = match_[pv];
                    match_[end] = pv;
                    match_[pv] = end;
                    end = ppv;
                }
            }
            return match_;
        }

    private:
        int lca(int a, int b)
        {
            std::vector<char> seen(n_, 0);
            while (true) {
                a = base_[a];
                seen[a] = 1;
                if (match_[a] < 0)
                    break;
                a = parent_[match_[a]];
            }
            while (true) {
                b = base_[b];
                if (seen[b])
                    return b;
                b = parent_[match_[b]];
            }
        }

        void mark_path(int v, int b, int child)
        {
            while (base_[v] != b) {
                in_blossom_[base_[v]] = 1;
                in_blossom_[base_[match_[v]]] = 1;
                parent_[v] = child;
                child = match_[v];
                v = parent_[match_[v]];
            }
        }

        int find_path(int root)
        {
            std::fill(used_.begin(), used_.end(), 0);
            std::fill(parent_.begin(), parent_.end(), -1);
            std::iota(base_.begin(), base_.end(), 0);
            used_[root] = 1;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int to : g_.neighbor_list(v)) {
                    if (base_[v] == base_[to] || match_[v] == to)
                        continue;
                    if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                        int cur = lca(v, to);
                        std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                        mark_path(v, cur, to);
                        mark_path(to, cur, v);
                        for (int i = 0; i < n_; ++i) {
                            if (in_blossom_[base_[i]]) {
                                base_[i] = cur;
                                if (!used_[i]) {
                                    used_[i] = 1;
                                    q.push(i);
                                }
                            }
                        }
                    } else if (parent_[to] < 0) {
                        parent_[to] = v;
                        if (match_[to] < 0)
                            return to;
                        used_[match_[to]] = 1;
                        q.push(match_[to]);
                    }
                }
            }
            return -1;
        }

        const Graph &g_;
        int n_;
        std::vector<int> match_, parent_, base_;
        std::vector<char> used_, in_blossom_;
    };

    Matching from_mate(const Graph &g, const std::vector<int> &mate)
    {
        Matching m;
        m.covered = g.vertex_set();
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (mate[v] > v) {
                m.edges.push_back({v, mate[v]});
                m.covered.set(static_cast<std::size_t>(v));
                m.covered.set(static_cast<std::size_t>(mate[v]));
            }
        }
        return m;
    }

} // namespace

Matching max_matching(const Graph &g)
{
    Blossom b(g);
    return from_mate(g, b.run());
}

Matching maximal_matching_greedy(const Graph &g, std::optional<std::span<const int>> order)
{
    Matching m;
    m.covered = g.vertex_set();
    auto take = [&](const Edge &e) {
        if (!m.covered.test(static_cast<std::size_t>(e.u)) && !m.covered.test(static_cast<std::size_t>(e.v))) {
            m.edges.push_back(e);
            m.covered.set(static_cast<std::size_t>(e.u));
            m.covered.set(static_cast<std::size_t>(e.v));
        }
    };
    if (order) {
        for (int idx : *order)
            take(g.edge(idx));
    } else {
        for (const auto &e : g.edges())
            take(e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

bool is_matching(const Graph &g, std::span<const Edge> edges)
{
    Bitset seen = g.vertex_set();
    for (const auto &e : edges) {
        if (!g.adjacent(e.u, e.v))
            return false;
        if (seen.test(static_cast<std::size_t>(e.u)) || seen.test(static_cast<std::size_t>(e.v)))
            return false;
        seen.set(static_cast<std::size_t>(e.u));
        seen.set(static_cast<std::size_t>(e.v));
    }
    return true;
}

namespace {

    // maximum independent set in a conflict graph on at most 32 nodes
    int max_independent(std::uint32_t candidates, const std::vector<std::uint32_t> &conflict, int current, int &best)
    {
        if (current + std::popcount(candidates) <= best)
            return best;
        if (candidates == 0) {
            best = current;
            return best;
        }
        int v = std::countr_zero(candidates);
        std::uint32_t rest = candidates & ~(std::uint32_t{1} << v);
        max_independent(rest & ~conflict[v], conflict, current + 1, best);
        max_independent(rest, conflict, current, best);
        return best;
    }

} // namespace

int max_induced_matching(const Graph &g, std::span<const Edge> within)
{
    const int c = static_cast<int>(within.size());
    if (c > max_induced_matching_limit)
        throw ResourceLimit("max_induced_matching: " + std::to_string(c) + " edges exceeds the limit of " +
                            std::to_string(max_induced_matching_limit));
    std::vector<std::uint32_t> conflict(static_cast<std::size_t>(c), 0);
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            const Edge &a = within[i];
            const Edge &b = within[j];
            bool clash = false;
            for (Vertex x : {a.u, a.v})
                for (Vertex y : {b.u, b.v})
                    if (x == y || g.adjacent(x, y))
                        clash = true;
            if (clash) {
                conflict[i] |= std::uint32_t{1} << j;
                conflict[j] |= std::uint32_t{1} << i;
            }
        }
    }
    int best = 0;
    std::uint32_t all = c == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << c) - 1);
    return max_independent(all, conflict, 0, best);
}

} // namespace sfc
