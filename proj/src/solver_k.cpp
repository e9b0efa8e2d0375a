#include "sfc/solver_k.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"
#include "sfc/matching.hpp"
#include "sfc/oracle.hpp"

namespace sfc {

namespace {

    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    void require_k(int k)
    {
        if (k < 0)
            throw InvalidInput("k must be non-negative");
    }

    EdgeList first_edges(const Graph &g, int k)
    {
        return EdgeList(g.edges().begin(), g.edges().begin() + k);
    }

    // k edges at the lowest-numbered vertex of maximum degree
    EdgeList star_edges(const Graph &g, int k)
    {
        Vertex best = 0;
        for (Vertex v = 1; v < g.num_vertices(); ++v)
            if (g.degree(v) > g.degree(best))
                best = v;
        EdgeList out;
        for (Vertex w : g.neighbor_list(best)) {
            if (static_cast<int>(out.size()) == k)
                break;
            out.push_back(make_edge(best, w));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
    {
        if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
            return std::numeric_limits<std::uint64_t>::max();
        return a * b;
    }

    std::uint64_t sat_add(std::uint64_t a, std::uint64_t b)
    {
        return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
    }

    std::uint64_t binomial(std::uint64_t n, std::uint64_t r)
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        unsigned __int128 acc = 1;
        for (std::uint64_t i = 1; i <= r; ++i) {
            acc = acc * (n - r + i) / i;
            if (acc > std::numeric_limits<std::uint64_t>::max())
                return std::numeric_limits<std::uint64_t>::max();
        }
        return static_cast<std::uint64_t>(acc);
    }

} // namespace

SolveReport solve_pk1(const Graph &g, int p, int k)
{
    require_k(k);
    if (p < 1)
        throw InvalidInput("pK1 needs p >= 1");
    SolveReport rep;
    rep.algorithm = "pk1";
    Bitset all = g.vertex_set();
    all.set_all();
    if (has_independent_set(g, all, p)) {
        rep.decision = Decision::No;
        rep.trace.push_back("graph has an independent set of size " + std::to_string(p));
        return rep;
    }
    if (k > g.num_edges()) {
        rep.decision = Decision::No;
        return rep;
    }
    rep.decision = Decision::Yes;
    rep.witness = first_edges(g, k);
    return rep;
}

SolveReport solve_pk1_k2(const Graph &g, int p, int k)
{
    require_k(k);
    if (p < 0)
        throw InvalidInput("p must be non-negative");
    SolveReport rep;
    rep.algorithm = "pk1k2";
    if (p == 0) {
        rep.decision = k == 0 ? Decision::Yes : Decision::No;
        rep.trace.push_back("every strong edge is itself a copy of K2");
        return rep;
    }
    for (const Edge &e : g.edges()) {
        Bitset rest = g.neighbors(e.u) | g.neighbors(e.v);
        rest.set(static_cast<std::size_t>(e.u));
        rest.set(static_cast<std::size_t>(e.v));
        Bitset outside = g.vertex_set();
        outside.set_all();
        outside -= rest;
        if (!has_independent_set(g, outside, p))
            rep.witness.push_back(e);
        else
            rep.fire("edge-excluded");
    }
    rep.decision = static_cast<int>(rep.witness.size()) >= k ? Decision::Yes : Decision::No;
    if (rep.no())
        rep.witness.clear();
    return rep;
}

KernelOutput kernelize_big_component(const Graph &g, const Pattern &f, int k)
{
    require_k(k);
    if (f.cls != PatternClass::BigComponent)
        throw InvalidInput("kernel needs a pattern with a component on at least 3 vertices");
    KernelOutput out;
    out.graph = g;
    out.k = k;
    out.to_original.resize(static_cast<std::size_t>(g.num_vertices()));
    std::iota(out.to_original.begin(), out.to_original.end(), 0);

    const std::size_t cap = static_cast<std::size_t>(f.num_vertices()) + static_cast<std::size_t>(k);
    for (;;) {
        // removing twins can make two classes merge, so repeat until stable
        Bitset drop = out.graph.vertex_set();
        for (const auto &cls : false_twin_classes(out.graph))
            for (std::size_t i = cap; i < cls.size(); ++i)
                drop.set(static_cast<std::size_t>(cls[i]));
        if (drop.none())
            break;
        out.twin_removals += static_cast<int>(drop.count());
        auto next = delete_vertices(out.graph, drop);
        for (auto &v : next.to_original)
            v = out.to_original[v];
        out.graph = std::move(next.graph);
        out.to_original = std::move(next.to_original);
    }

    Matching m = maximal_matching_greedy(out.graph);
    out.matching_size = m.size();
    if (m.size() >= k) {
        SolveReport early;
        early.decision = Decision::Yes;
        early.algorithm = "big-component";
        early.witness = lift_edges(m.edges, out.to_original);
        early.fire("matching-shortcut");
        early.trace.push_back("greedy matching of size " + std::to_string(m.size()) + " is a solution");
        out.early = std::move(early);
    }
    if (k >= 1)
        out.vertex_bound = sat_add(sat_mul(std::uint64_t{1} << std::min(2 * k - 2, 63),
                                           static_cast<std::uint64_t>(f.num_vertices() + k)),
                                   static_cast<std::uint64_t>(2 * k - 2));
    if (k - 1 > 31)
        out.vertex_bound = std::numeric_limits<std::uint64_t>::max();
    return out;
}

SolveReport solve_big_component(const Graph &g, const Pattern &f, int k, std::uint64_t budget)
{
    const auto start = Clock::now();
    KernelOutput kern = kernelize_big_component(g, f, k);
    SolveReport rep;
    if (kern.early) {
        rep = std::move(*kern.early);
    } else {
        rep = solve_exact(kern.graph, f, kern.k, budget);
        rep.algorithm = "big-component";
        rep.witness = lift_edges(rep.witness, kern.to_original);
        rep.trace.push_back("kernel with " + std::to_string(kern.graph.num_vertices()) + " vertices");
    }
    if (kern.twin_removals > 0)
        rep.fire("twin-removal", kern.twin_removals);
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

std::optional<std::vector<int>> knapsack_exact(std::span<const int> c, std::span<const int> w, int k, int wmax)
{
    if (c.size() != w.size())
        throw InvalidInput("knapsack: size mismatch");
    if (k < 0)
        return std::nullopt;
    constexpr int inf = std::numeric_limits<int>::max();
    const std::size_t n = c.size();
    const std::size_t width = static_cast<std::size_t>(k) + 1;
    // best[i][s]: least weight reaching sum s with the first i items
    std::vector<int> best((n + 1) * width, inf);
    best[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i] < 0 || w[i] < 0)
            throw InvalidInput("knapsack: negative entry");
        const int *prev = &best[i * width];
        int *cur = &best[(i + 1) * width];
        std::copy(prev, prev + width, cur);
        if (c[i] > k)
            continue;
        for (std::size_t s = static_cast<std::size_t>(c[i]); s < width; ++s) {
            const int from = prev[s - static_cast<std::size_t>(c[i])];
            if (from != inf && from + w[i] < cur[s])
                cur[s] = from + w[i];
        }
    }
    if (best[n * width + static_cast<std::size_t>(k)] > wmax)
        return std::nullopt;
    std::vector<int> picked;
    std::size_t s = static_cast<std::size_t>(k);
    for (std::size_t i = n; i > 0; --i) {
        if (best[i * width + s] == best[(i - 1) * width + s])
            continue;
        picked.push_back(static_cast<int>(i - 1));
        s -= static_cast<std::size_t>(c[i - 1]);
    }
    std::reverse(picked.begin(), picked.end());
    return picked;
}

SeparationPlan plan_separation(int k, int max_degree, int num_edges)
{
    SeparationPlan plan;
    plan.a = k;
    // non-solution edges within distance one of the solution's vertices
    const std::int64_t d = max_degree;
    const std::int64_t around = 2LL * k * d * std::max<std::int64_t>(d - 1, 0);
    plan.b = std::max<std::int64_t>(0, std::min<std::int64_t>(around, num_edges - k));
    if (plan.a == 0 || plan.b == 0) {
        plan.red_probability = plan.a == 0 ? 0.0 : 1.0;
        plan.round_success = 1;
        plan.rounds = 1;
        return plan;
    }
    const double a = plan.a, b = static_cast<double>(plan.b);
    plan.red_probability = a / (a + b);
    const double log_success = a * std::log(plan.red_probability) + b * std::log1p(-plan.red_probability);
    plan.round_success = std::exp(log_success);
    // smallest T with (1 - P)^T <= 2^-20
    const double per_round = -std::log1p(-plan.round_success);
    const double t = std::ceil(20.0 * std::log(2.0) / per_round);
    plan.rounds = t >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(std::max(1.0, t));
    return plan;
}

namespace {

    class SeparationRounds {
    public:
        SeparationRounds(const Graph &g, int q, int k) : g_(g), q_(q), k_(k)
        {
            const auto n = static_cast<std::size_t>(g.num_vertices());
            parent_.resize(n);
            in_r_.resize(n);
            comp_of_.resize(n);
            red_.resize(static_cast<std::size_t>(g.num_edges()));
        }

        // One colouring; fills witness_ on success.
        bool round(std::mt19937_64 &rng, std::uint64_t threshold, bool all_red)
        {
            const int m = g_.num_edges();
            std::fill(in_r_.begin(), in_r_.end(), 0);
            int red_count = 0;
            for (int e = 0; e < m; ++e) {
                red_[e] = all_red || rng() < threshold;
                if (red_[e]) {
                    ++red_count;
                    in_r_[g_.edge(e).u] = in_r_[g_.edge(e).v] = 1;
                }
            }
            if (red_count < k_)
                return false;
            std::iota(parent_.begin(), parent_.end(), 0);
            for (const Edge &e : g_.edges())
                if (in_r_[e.u] && in_r_[e.v])
                    unite(e.u, e.v);

            // group red edges by component
            groups_.clear();
            std::fill(comp_of_.begin(), comp_of_.end(), -1);
            for (int e = 0; e < m; ++e) {
                if (!red_[e])
                    continue;
                const int root = find(g_.edge(e).u);
                if (comp_of_[root] < 0) {
                    comp_of_[root] = static_cast<int>(groups_.size());
                    groups_.emplace_back();
                }
                groups_[comp_of_[root]].push_back(g_.edge(e));
            }
            cost_.clear();
            weight_.clear();
            kept_.clear();
            int reachable = 0;
            for (std::size_t i = 0; i < groups_.size(); ++i) {
                const int c = static_cast<int>(groups_[i].size());
                if (c > k_)
                    continue;
                reachable += c;
                kept_.push_back(static_cast<int>(i));
                cost_.push_back(c);
            }
            if (reachable < k_)
                return false;
            for (int i : kept_)
                weight_.push_back(max_induced_matching(g_, groups_[i]));
            auto pick = knapsack_exact(cost_, weight_, k_, q_ - 1);
            if (!pick)
                return false;
            witness_.clear();
            for (int j : *pick)
                witness_.insert(witness_.end(), groups_[kept_[j]].begin(), groups_[kept_[j]].end());
            std::sort(witness_.begin(), witness_.end());
            return true;
        }

        const EdgeList &witness() const noexcept { return witness_; }

    private:
        int find(int v)
        {
            while (parent_[v] != v) {
                parent_[v] = parent_[parent_[v]];
                v = parent_[v];
            }
            return v;
        }
        void unite(int a, int b) { parent_[find(a)] = find(b); }

        const Graph &g_;
        int q_;
        int k_;
        std::vector<int> parent_;
        std::vector<char> in_r_;
        std::vector<char> red_;
        std::vector<int> comp_of_;
        std::vector<EdgeList> groups_;
        std::vector<int> cost_, weight_, kept_;
        EdgeList witness_;
    };

} // namespace

SolveReport solve_qk2(const Graph &g, int q, int k, std::uint64_t seed, std::uint64_t round_cap)
{
    require_k(k);
    if (q < 2)
        throw InvalidInput("qK2 solver needs q >= 2");
    const auto start = Clock::now();
    SolveReport rep;
    rep.algorithm = "qk2";
    const int m = g.num_edges();
    if (k > m) {
        rep.decision = Decision::No;
        rep.trace.push_back("k exceeds the number of edges");
        return rep;
    }
    if (k < q) {
        rep.decision = Decision::Yes;
        rep.witness = first_edges(g, k);
        rep.fire("few-edges-shortcut");
        return rep;
    }
    if (g.max_degree() >= k) {
        rep.decision = Decision::Yes;
        rep.witness = star_edges(g, k);
        rep.fire("degree-shortcut");
        return rep;
    }

    const SeparationPlan plan = plan_separation(k, g.max_degree(), m);
    const std::uint64_t rounds = std::min(plan.rounds, round_cap);
    const bool all_red = plan.red_probability >= 1.0;
    const auto threshold = static_cast<std::uint64_t>(std::ldexp(plan.red_probability, 64));
    std::mt19937_64 rng(seed);
    SeparationRounds sep(g, q, k);
    rep.trace.push_back("separation: a=" + std::to_string(plan.a) + " b=" + std::to_string(plan.b) +
                        " rounds=" + std::to_string(plan.rounds));
    std::uint64_t done = 0;
    for (; done < rounds; ++done) {
        if (sep.round(rng, threshold, all_red)) {
            ++done;
            rep.decision = Decision::Yes;
            rep.witness = sep.witness();
            if (!satisfies_closure(g, std::span<const Edge>(rep.witness), classify(named::matching_plus_isolated(0, q))))
                throw std::logic_error("separation produced an invalid witness");
            break;
        }
    }
    rep.stats.nodes = done;
    rep.fire("separation-rounds", static_cast<std::int64_t>(done));
    if (!rep.yes()) {
        rep.miss_probability = std::exp(static_cast<double>(done) * std::log1p(-plan.round_success));
        if (done < plan.rounds) {
            rep.decision = Decision::Inconclusive;
            rep.trace.push_back("round cap reached before the miss probability fell below 2^-20");
        } else {
            rep.decision = Decision::No;
        }
    }
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

SolveReport solve_pk1_qk2(const Graph &g, int p, int q, int k, std::uint64_t seed, std::uint64_t budget,
                          std::uint64_t round_cap)
{
    require_k(k);
    if (q < 2)
        throw InvalidInput("pK1+qK2 solver needs q >= 2");
    if (p < 0)
        throw InvalidInput("p must be non-negative");
    if (p == 0)
        return solve_qk2(g, q, k, seed, round_cap);
    const auto start = Clock::now();
    SolveReport rep;
    const int m = g.num_edges();
    if (k < q) {
        rep.algorithm = "pk1qk2";
        rep.decision = k <= m ? Decision::Yes : Decision::No;
        if (rep.yes())
            rep.witness = first_edges(g, k);
        rep.fire("few-edges-shortcut");
        return rep;
    }
    if (g.max_degree() >= k) {
        rep.algorithm = "pk1qk2";
        rep.decision = Decision::Yes;
        rep.witness = star_edges(g, k);
        rep.fire("degree-shortcut");
        return rep;
    }
    const long long threshold = 2LL * k * (k - 1) + static_cast<long long>(p) * k;
    if (g.num_vertices() < threshold) {
        Pattern f = classify(named::matching_plus_isolated(p, q));
        rep = solve_exact(g, f, k, budget);
        rep.fire("brute-force-regime");
        rep.trace.push_back("n < " + std::to_string(threshold) + ": exact search");
    } else {
        // with this many vertices the isolated part of F always finds room
        rep = solve_qk2(g, q, k, seed, round_cap);
        rep.fire("isolated-vertices-dropped");
    }
    rep.algorithm = "pk1qk2";
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

SolveReport solve_by_k(const Graph &g, const Pattern &f, int k, std::uint64_t seed, std::uint64_t budget)
{
    const auto start = Clock::now();
    SolveReport rep;
    switch (f.cls) {
    case PatternClass::PK1:
        rep = solve_pk1(g, f.isolated, k);
        break;
    case PatternClass::PK1_K2:
        rep = solve_pk1_k2(g, f.isolated, k);
        break;
    case PatternClass::PK1_QK2:
        rep = f.isolated == 0 ? solve_qk2(g, f.k2_components, k, seed)
                              : solve_pk1_qk2(g, f.isolated, f.k2_components, k, seed, budget);
        break;
    case PatternClass::BigComponent:
        rep = solve_big_component(g, f, k, budget);
        break;
    }
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

DegenerateKernel degenerate_kernel_bound(const Graph &g, const Pattern &f, int k)
{
    DegenerateKernel out;
    out.kernel = kernelize_big_component(g, f, k);
    out.degeneracy = degeneracy(g);
    const auto x = static_cast<std::uint64_t>(2 * out.kernel.matching_size);
    const auto d = static_cast<std::uint64_t>(out.degeneracy);
    const auto cls = static_cast<std::uint64_t>(f.num_vertices() + k);
    std::uint64_t bound = x;
    // high-degree outside vertices: each (d+1)-subset of X has at most d common neighbours
    bound = sat_add(bound, sat_mul(binomial(x, d + 1), d));
    // low-degree ones: one twin class per neighbourhood of size <= d
    for (std::uint64_t i = 0; i <= d; ++i)
        bound = sat_add(bound, sat_mul(binomial(x, i), cls));
    out.bound = bound;
    return out;
}

} // namespace sfc
