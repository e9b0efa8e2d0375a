#include "sfc/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"

namespace sfc {

namespace {

    class EdgeBranchAndBound {
    public:
        EdgeBranchAndBound(const Graph &g, const ClosureTracker &proto, int k, std::uint64_t budget)
            : g_(g), tracker_(proto), k_(k), budget_(budget), weak_(static_cast<std::size_t>(g.num_edges()), 0),
              weak_in_copy_(proto.copies().size(), 0), packed_(static_cast<std::size_t>(g.num_edges()), 0)
        {
            const int m = g.num_edges();
            // edges outside every copy are always safe to make strong
            for (int e = 0; e < m; ++e) {
                if (tracker_.copies_of_edge(e).empty())
                    tracker_.add(e);
                else
                    order_.push_back(e);
            }
            std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
                return tracker_.copies_of_edge(a).size() > tracker_.copies_of_edge(b).size();
            });
        }

        Decision run()
        {
            const int r = search(0);
            if (r > 0)
                return Decision::Yes;
            return r == 0 ? Decision::No : Decision::Inconclusive;
        }

        EdgeList witness() const { return witness_; }
        std::uint64_t nodes() const noexcept { return nodes_; }

    private:
        // 1 found, 0 exhausted, -1 out of budget
        int search(std::size_t pos)
        {
            if (++nodes_ > budget_)
                return -1;
            if (tracker_.strong_count() >= k_) {
                witness_ = tracker_.strong_edges();
                return 1;
            }
            const int undecided = static_cast<int>(order_.size() - pos);
            if (tracker_.strong_count() + undecided < k_)
                return 0;
            if (tracker_.strong_count() + undecided - packing_bound() < k_)
                return 0;
            const int e = order_[pos];
            if (tracker_.can_add(e)) {
                tracker_.add(e);
                const int r = search(pos + 1);
                tracker_.remove(e);
                if (r != 0)
                    return r;
            }
            set_weak(e, true);
            const int r = search(pos + 1);
            set_weak(e, false);
            return r;
        }

        void set_weak(int e, bool on)
        {
            weak_[e] = on;
            for (int c : tracker_.copies_of_edge(e))
                weak_in_copy_[c] += on ? 1 : -1;
        }

        // Every copy not yet hit by a weak edge needs one of its undecided
        // edges to turn weak; edge-disjoint such copies need distinct edges.
        int packing_bound()
        {
            ++stamp_;
            int bound = 0;
            const auto &copies = tracker_.copies();
            for (std::size_t c = 0; c < copies.size(); ++c) {
                if (weak_in_copy_[c] > 0)
                    continue;
                bool free = true;
                for (int e : copies[c].edges)
                    if (!tracker_.is_strong(e) && packed_[e] == stamp_) {
                        free = false;
                        break;
                    }
                if (!free)
                    continue;
                ++bound;
                for (int e : copies[c].edges)
                    if (!tracker_.is_strong(e))
                        packed_[e] = stamp_;
            }
            return bound;
        }

        const Graph &g_;
        ClosureTracker tracker_;
        int k_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::vector<int> order_;
        std::vector<char> weak_;
        std::vector<int> weak_in_copy_;
        std::vector<std::uint32_t> packed_;
        std::uint32_t stamp_ = 0;
        EdgeList witness_;
    };

    double elapsed_ms(std::chrono::steady_clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    SolveReport solve_with_tracker(const Graph &g, const ClosureTracker &tracker, int k, std::uint64_t budget)
    {
        SolveReport rep;
        rep.algorithm = "oracle";
        if (k < 0)
            throw InvalidInput("k must be non-negative");
        if (tracker.unbreakable()) {
            rep.decision = Decision::No;
            rep.trace.push_back("an edgeless induced copy of F exists; no spanning subgraph satisfies the closure");
            return rep;
        }
        if (k > g.num_edges()) {
            rep.decision = Decision::No;
            return rep;
        }
        EdgeBranchAndBound search(g, tracker, k, budget);
        rep.decision = search.run();
        rep.witness = search.witness();
        rep.stats.nodes = search.nodes();
        return rep;
    }

} // namespace

SolveReport solve_exact(const Graph &g, const Pattern &f, int k, std::uint64_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    ClosureTracker tracker(g, f);
    auto rep = solve_with_tracker(g, tracker, k, budget);
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

SolveReport optimum(const Graph &g, const Pattern &f, std::uint64_t budget)
{
    const auto start = std::chrono::steady_clock::now();
    ClosureTracker tracker(g, f);
    SolveReport rep;
    rep.algorithm = "oracle";
    if (tracker.unbreakable()) {
        rep.decision = Decision::No;
        rep.trace.push_back("an edgeless induced copy of F exists; no spanning subgraph satisfies the closure");
        rep.stats.millis = elapsed_ms(start);
        return rep;
    }
    rep.decision = Decision::Yes;
    int best = 0;
    std::uint64_t used = 0;
    while (best < g.num_edges()) {
        auto step = solve_with_tracker(g, tracker, best + 1, budget > used ? budget - used : 0);
        used += step.stats.nodes;
        if (step.inconclusive()) {
            rep.decision = Decision::Inconclusive;
            rep.trace.push_back("budget exhausted; best lower bound " + std::to_string(best));
            break;
        }
        if (step.no())
            break;
        best = static_cast<int>(step.witness.size());
        rep.witness = std::move(step.witness);
    }
    rep.stats.nodes = used;
    if (rep.yes())
        rep.optimum = best;
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

} // namespace sfc
