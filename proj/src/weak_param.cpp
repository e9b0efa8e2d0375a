#include "sfc/weak_param.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <unordered_set>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"

namespace sfc {

namespace {

    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start)
    {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    // Bounded search over a family of sets: pick the first set not yet hit and
    // branch on its elements. Shared by both solvers; the weak-edge version
    // feeds it the F-graphs of G in lexicographic vertex order.
    class HitSearch {
    public:
        HitSearch(int universe, const std::vector<std::vector<int>> &sets, std::uint64_t budget)
            : sets_(sets), budget_(budget), chosen_(static_cast<std::size_t>(universe))
        {
        }

        // 1 found, 0 none, -1 budget exhausted
        int run(int l) { return search(l); }
        std::vector<int> solution() const { return chosen_.to_vector(); }
        std::uint64_t nodes() const noexcept { return nodes_; }
        std::uint64_t memo_hits() const noexcept { return memo_hits_; }

    private:
        int search(int left)
        {
            if (++nodes_ > budget_)
                return -1;
            if (!seen_.insert(chosen_).second) {
                ++memo_hits_;
                return 0;
            }
            const std::vector<int> *open = nullptr;
            for (const auto &s : sets_) {
                bool hit = false;
                for (int e : s)
                    hit = hit || chosen_.test(static_cast<std::size_t>(e));
                if (!hit) {
                    open = &s;
                    break;
                }
            }
            if (open == nullptr)
                return 1;
            if (left == 0)
                return 0;
            for (int e : *open) {
                chosen_.set(static_cast<std::size_t>(e));
                const int r = search(left - 1);
                if (r != 0)
                    return r;
                chosen_.reset(static_cast<std::size_t>(e));
            }
            return 0;
        }

        const std::vector<std::vector<int>> &sets_;
        std::uint64_t budget_;
        std::uint64_t nodes_ = 0;
        std::uint64_t memo_hits_ = 0;
        Bitset chosen_;
        std::unordered_set<Bitset, BitsetHash> seen_;
    };

    void require_edges(const Pattern &f)
    {
        if (f.num_edges() == 0)
            throw InvalidInput("pattern must have at least one edge for the weak-edge parameter");
    }

    void require_l(int l)
    {
        if (l < 0)
            throw InvalidInput("l must be non-negative");
    }

    SolveReport finish(const Graph &g, const std::vector<int> &weak, const char *algorithm)
    {
        SolveReport rep;
        rep.algorithm = algorithm;
        rep.decision = Decision::Yes;
        std::vector<char> drop(static_cast<std::size_t>(g.num_edges()), 0);
        for (int e : weak)
            drop[e] = 1;
        for (int e = 0; e < g.num_edges(); ++e)
            if (!drop[e])
                rep.witness.push_back(g.edge(e));
        return rep;
    }

} // namespace

SolveReport solve_weak_branching(const Graph &g, const Pattern &f, int l, std::uint64_t budget)
{
    const auto start = Clock::now();
    require_edges(f);
    require_l(l);
    std::vector<std::vector<int>> sets;
    for (auto &c : induced_copies(g, f))
        sets.push_back(std::move(c.edges));
    HitSearch search(g.num_edges(), sets, budget);
    const int res = search.run(l);
    SolveReport rep;
    if (res > 0)
        rep = finish(g, search.solution(), "weak-branch");
    else
        rep.decision = res == 0 ? Decision::No : Decision::Inconclusive;
    rep.algorithm = "weak-branch";
    rep.stats.nodes = search.nodes();
    rep.fire("f-graphs", static_cast<std::int64_t>(sets.size()));
    rep.fire("memo-hit", static_cast<std::int64_t>(search.memo_hits()));
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

HittingSetInstance compress_to_hitting_set(const Graph &g, const Pattern &f, int l)
{
    require_edges(f);
    require_l(l);
    HittingSetInstance inst;
    inst.universe = g.num_edges();
    inst.d = f.num_edges();
    inst.l = l;
    for (auto &c : induced_copies(g, f))
        inst.sets.push_back(std::move(c.edges));
    std::sort(inst.sets.begin(), inst.sets.end());
    inst.sets.erase(std::unique(inst.sets.begin(), inst.sets.end()), inst.sets.end());
    return inst;
}

std::optional<std::vector<int>> solve_hitting_set(const HittingSetInstance &inst, std::uint64_t budget)
{
    HitSearch search(inst.universe, inst.sets, budget);
    const int res = search.run(inst.l);
    if (res < 0)
        throw ResourceLimit("hitting set search exceeded its node budget");
    if (res == 0)
        return std::nullopt;
    return search.solution();
}

SolveReport solve_via_hitting_set(const Graph &g, const Pattern &f, int l, std::uint64_t budget)
{
    const auto start = Clock::now();
    const HittingSetInstance inst = compress_to_hitting_set(g, f, l);
    SolveReport rep;
    try {
        const auto hit = solve_hitting_set(inst, budget);
        if (hit)
            rep = finish(g, *hit, "hitting-set");
        else
            rep.decision = Decision::No;
    } catch (const ResourceLimit &) {
        rep.decision = Decision::Inconclusive;
    }
    rep.algorithm = "hitting-set";
    rep.fire("sets", static_cast<std::int64_t>(inst.sets.size()));
    rep.trace.push_back("d=" + std::to_string(inst.d) + " sets=" + std::to_string(inst.sets.size()));
    rep.stats.millis = elapsed_ms(start);
    return rep;
}

std::string serialize_hitting_set(const HittingSetInstance &inst)
{
    std::ostringstream out;
    out << "u " << inst.universe << " s " << inst.sets.size() << " d " << inst.d << " l " << inst.l << '\n';
    for (const auto &s : inst.sets) {
        for (std::size_t i = 0; i < s.size(); ++i)
            out << (i ? " " : "") << s[i] + 1;
        out << '\n';
    }
    return out.str();
}

HittingSetInstance parse_hitting_set(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    HittingSetInstance inst;
    std::size_t expected = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream ls(line);
        if (!header) {
            std::string u, s, d, l, extra;
            long long count = -1;
            if (!(ls >> u >> inst.universe >> s >> count >> d >> inst.d >> l >> inst.l) || u != "u" || s != "s" ||
                d != "d" || l != "l" || inst.universe < 0 || count < 0 || inst.d < 0 || inst.l < 0)
                throw ParseError(line_no, "malformed header, expected 'u <U> s <S> d <d> l <l>'");
            if (ls >> extra)
                throw ParseError(line_no, "malformed header, trailing '" + extra + "'");
            expected = static_cast<std::size_t>(count);
            header = true;
            continue;
        }
        std::vector<int> set;
        std::string tok;
        while (ls >> tok) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception &) {
                throw ParseError(line_no, "element '" + tok + "' is not an integer");
            }
            if (v < 1 || v > inst.universe)
                throw ParseError(line_no, "element " + tok + " outside the universe");
            set.push_back(v - 1);
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw ParseError(line_no, "repeated element in a set");
        if (static_cast<int>(set.size()) != inst.d)
            throw ParseError(line_no, "set has " + std::to_string(set.size()) + " elements, expected " +
                                          std::to_string(inst.d));
        inst.sets.push_back(std::move(set));
    }
    if (!header)
        throw ParseError(line_no, "missing header");
    if (inst.sets.size() != expected)
        throw ParseError(line_no, "expected " + std::to_string(expected) + " sets, found " +
                                      std::to_string(inst.sets.size()));
    std::sort(inst.sets.begin(), inst.sets.end());
    inst.sets.erase(std::unique(inst.sets.begin(), inst.sets.end()), inst.sets.end());
    return inst;
}

} // namespace sfc
