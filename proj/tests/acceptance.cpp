// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "sfc/above_matching.hpp"
#include "sfc/cli.hpp"
#include "sfc/closure.hpp"
#include "sfc/graph_algorithms.hpp"
#include "sfc/io.hpp"
#include "sfc/matching.hpp"
#include "sfc/oracle.hpp"
#include "sfc/reductions.hpp"
#include "sfc/solver_k.hpp"
#include "sfc/weak_param.hpp"
#include "support.hpp"

using namespace sfc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

bool valid_yes(const Graph &g, const Pattern &f, const SolveReport &r, int k)
{
    return r.yes() && static_cast<int>(r.witness.size()) >= k &&
           satisfies_closure(g, std::span<const Edge>(r.witness), f);
}

// A decision matches the exact one when both are conclusive, equal, and a yes
// carries a valid witness.
bool agrees(const Graph &g, const Pattern &f, const SolveReport &got, const SolveReport &expect, int k)
{
    if (got.inconclusive() || expect.inconclusive() || got.yes() != expect.yes())
        return false;
    return !got.yes() || valid_yes(g, f, got, k);
}

Outcome tally(long long checked, long long bad, const std::string &what)
{
    std::ostringstream s;
    s << bad << " disagreements over " << checked << ' ' << what;
    return {bad == 0 && checked > 0, s.str()};
}

Graph random_graph(std::mt19937_64 &rng, const std::string &model, int n, double p, int param = 4)
{
    RunConfig cfg;
    cfg.model = model;
    cfg.n = n;
    cfg.edge_probability = p;
    cfg.max_degree = param;
    cfg.degeneracy = param;
    return gen_random(cfg, rng);
}

double uniform(std::mt19937_64 &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64 &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Outcome oracle_cross_validation()
{
    const std::vector<Pattern> patterns{
        classify(named::empty(3), "3K1"),
        classify(named::matching_plus_isolated(1, 1), "K1+K2"),
        classify(named::matching_plus_isolated(0, 2), "2K2"),
        classify(named::matching_plus_isolated(1, 2), "K1+2K2"),
        classify(named::path(3), "P3"),
        classify(named::complete(3), "K3"),
        classify(named::path(4), "P4"),
        classify(named::star(3), "K1,3"),
    };
    long long checked = 0, bad = 0;
    for (int n = 1; n <= 6; ++n)
        for (const Graph &g : testing::graphs_up_to_iso(n))
            for (const Pattern &f : patterns)
                for (int k = 0; k <= g.num_edges(); ++k) {
                    const SolveReport expect = solve_exact(g, f, k);
                    const SolveReport got = solve_by_k(g, f, k);
                    ++checked;
                    if (!agrees(g, f, got, expect, k)) {
                        ++bad;
                        std::cerr << "  [1] " << f.name << " k=" << k << "\n" << serialize_graph(g);
                    }
                }
    return tally(checked, bad, "(graph, pattern, k) triples on all graphs up to 6 vertices");
}

Outcome stc_suite()
{
    std::mt19937_64 rng(9001);
    const Pattern p3 = classify(named::path(3));
    long long checked = 0, bad = 0;
    for (int i = 0; i < 300; ++i) {
        // every other graph is built from pendant triangles and diamonds
        const Graph g = i % 2 ? testing::random_triangle_rich(rng, uniform_int(rng, 6, 10), 4, 0.05)
                              : random_graph(rng, "max-deg", uniform_int(rng, 3, 10), uniform(rng, 0.3, 1.0), 4);
        const int mu = max_matching(g).size();
        for (int k = mu; k <= mu + 3; ++k) {
            ++checked;
            if (!agrees(g, p3, solve_stc_maxdeg4(g, k), solve_exact(g, p3, k), k)) {
                ++bad;
                std::cerr << "  [2] k=" << k << "\n" << serialize_graph(g);
            }
        }
    }
    return tally(checked, bad, "decisions on 300 graphs with max degree 4");
}

Outcome star_suite()
{
    std::mt19937_64 rng(9002);
    const Pattern star = classify(named::star(3));
    long long checked = 0, bad = 0;
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, "gnp", uniform_int(rng, 3, 10), uniform(rng, 0.15, 0.8));
        const int mu = max_matching(g).size();
        for (int k = mu; k <= mu + 3; ++k) {
            ++checked;
            if (!agrees(g, star, solve_star_above_matching(g, 3, k), solve_exact(g, star, k), k)) {
                ++bad;
                std::cerr << "  [3] k=" << k << "\n" << serialize_graph(g);
            }
        }
    }
    return tally(checked, bad, "decisions on 300 graphs for K1,3");
}

Outcome weak_suite()
{
    std::mt19937_64 rng(9003);
    const std::array<Pattern, 4> patterns{classify(named::path(3)), classify(named::complete(3)),
                                          classify(named::path(4)), classify(named::matching_plus_isolated(0, 2))};
    long long checked = 0, bad = 0;
    for (int i = 0; i < 300; ++i) {
        const Graph g = random_graph(rng, "gnp", uniform_int(rng, 2, 9), uniform(rng, 0.2, 0.8));
        const Pattern &f = patterns[static_cast<std::size_t>(i) % patterns.size()];
        const int l = i % 4;
        const int k = std::max(0, g.num_edges() - l);
        const SolveReport expect = solve_exact(g, f, k);
        checked += 2;
        const bool a = agrees(g, f, solve_weak_branching(g, f, l), expect, k);
        const bool b = agrees(g, f, solve_via_hitting_set(g, f, l), expect, k);
        bad += !a + !b;
        if (!a || !b)
            std::cerr << "  [4] " << f.name << " l=" << l << "\n" << serialize_graph(g);
    }
    return tally(checked, bad, "weak-edge decisions (branching and hitting set) on 300 instances");
}

Outcome kernel_suite()
{
    std::mt19937_64 rng(9004);
    const Pattern p3 = classify(named::path(3));
    long long checked = 0, violations = 0, reduced = 0;
    for (int i = 0; i < 200; ++i) {
        const int d = 1 + i % 2;
        const Graph g = random_graph(rng, "d-degenerate", uniform_int(rng, 4, 14), uniform(rng, 0.2, 0.9), d);
        const int k = uniform_int(rng, 1, 5);
        const DegenerateKernel dk = degenerate_kernel_bound(g, p3, k);
        const KernelOutput &kern = dk.kernel;
        ++checked;
        bool ok = dk.degeneracy <= d;
        const SolveReport expect = solve_exact(g, p3, k);
        if (kern.early) {
            ok = ok && agrees(g, p3, *kern.early, expect, k);
        } else {
            ++reduced;
            const auto n = static_cast<std::uint64_t>(kern.graph.num_vertices());
            ok = ok && n <= kern.vertex_bound && n <= dk.bound;
            const SolveReport small = solve_exact(kern.graph, p3, kern.k);
            ok = ok && !small.inconclusive() && !expect.inconclusive() && small.yes() == expect.yes();
        }
        if (!ok) {
            ++violations;
            std::cerr << "  [5] k=" << k << "\n" << serialize_graph(g);
        }
    }
    // a star with many leaves: every leaf is a twin, so the cap binds
    for (int leaves = 5; leaves <= 40; leaves += 5)
        for (int k = 1; k <= 4; ++k) {
            const Graph g = named::star(leaves);
            const KernelOutput kern = kernelize_big_component(g, p3, k);
            ++checked;
            const bool ok = kern.early ||
                            (static_cast<std::uint64_t>(kern.graph.num_vertices()) <= kern.vertex_bound &&
                             solve_exact(kern.graph, p3, kern.k).yes() == solve_exact(g, p3, k).yes());
            violations += !ok;
        }
    const bool example = kernelize_big_component(named::star(3), p3, 3).vertex_bound == 100;
    std::ostringstream s;
    s << violations << " bound or equivalence violations over " << checked << " kernels (" << reduced
      << " random ones past the matching shortcut)"
      << (example ? "" : "; P3/k=3 bound is not 100");
    return {violations == 0 && example, s.str()};
}

void families(int t, int p, std::vector<std::vector<int>> &cur, int from,
              const std::function<void(const std::vector<std::vector<int>> &)> &fn)
{
    if (static_cast<int>(cur.size()) == p) {
        fn(cur);
        return;
    }
    for (int mask = from; mask < (1 << t); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < t; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        cur.push_back(s);
        families(t, p, cur, mask, fn);
        cur.pop_back();
    }
}

Outcome reduction_suite()
{
    const Pattern p3 = classify(named::path(3));
    long long split = 0, split_bad = 0;
    for (int t = 1; t <= 3; ++t)
        for (int p = 1; p <= 3; ++p) {
            std::vector<std::vector<int>> cur;
            families(t, p, cur, 1, [&](const std::vector<std::vector<int>> &sets) {
                for (int k = 0; k <= p + 1; ++k) {
                    if ((k + t) % 2)
                        continue;
                    const SetPackingInstance inst{t, sets, k};
                    const SplitReduction red = gen_split_from_set_packing(inst);
                    const SolveReport r = solve_exact(red.graph, p3, red.k);
                    ++split;
                    if (r.inconclusive() || r.yes() != has_set_packing(inst)) {
                        ++split_bad;
                        std::cerr << "  [6] split\n" << serialize_set_packing(inst);
                    }
                }
            });
        }

    std::vector<X3CInstance> x3c{{1, {}}, {1, {{0, 1, 2}}}, {1, {{0, 1, 2}, {2, 0, 1}}},
                                 {2, {{0, 1, 2}, {3, 4, 5}}}, {2, {{0, 1, 2}, {2, 3, 4}}}, {2, {{0, 1, 3}}}};
    long long planar = 0, planar_bad = 0;
    for (const auto &inst : x3c) {
        const PlanarReduction red = gen_planar_from_x3c(inst);
        const SolveReport r = solve_exact(red.graph, p3, red.target);
        ++planar;
        if (r.inconclusive() || r.yes() != has_exact_cover(inst) || !is_planar(red.graph)) {
            ++planar_bad;
            std::cerr << "  [6] planar\n" << serialize_x3c(inst);
        }
    }

    std::mt19937_64 rng(9006);
    long long stars = 0, stars_bad = 0;
    for (int i = 0; i < 50; ++i) {
        const int p = uniform_int(rng, 1, 3);
        const Graph g = random_graph(rng, "gnp", uniform_int(rng, 1, 6), uniform(rng, 0.2, 0.8));
        const Pattern f = classify(named::matching_plus_isolated(p, 1));
        Bitset all = g.vertex_set();
        all.set_all();
        const SolveReport r = solve_exact(gen_pk1k2_from_independent_set(g, p), f, 1);
        ++stars;
        if (r.inconclusive() || r.yes() == has_independent_set(g, all, p)) {
            ++stars_bad;
            std::cerr << "  [6] double star p=" << p << "\n" << serialize_graph(g);
        }
    }
    std::ostringstream s;
    s << split_bad << '/' << split << " split, " << planar_bad << '/' << planar << " planar, " << stars_bad << '/'
      << stars << " double-star disagreements";
    return {split_bad + planar_bad + stars_bad == 0, s.str()};
}

Outcome qk2_suite()
{
    std::mt19937_64 rng(9007);
    const Pattern f = classify(named::matching_plus_isolated(0, 2));
    long long checked = 0, bad = 0, separated = 0;
    for (int i = 0; i < 500; ++i) {
        // low-degree graphs get past the star shortcut and into the colouring rounds
        const Graph g = i % 2 ? random_graph(rng, "max-deg", uniform_int(rng, 4, 10), uniform(rng, 0.3, 1.0),
                                             uniform_int(rng, 1, 3))
                              : random_graph(rng, "gnp", uniform_int(rng, 4, 10), uniform(rng, 0.15, 0.7));
        const int k = std::min(g.num_edges(), 1 + i % 5);
        const SolveReport got = solve_qk2(g, 2, k, default_seed + static_cast<std::uint64_t>(i));
        ++checked;
        separated += got.stats.rules.count("separation-rounds");
        if (!agrees(g, f, got, solve_exact(g, f, k), k)) {
            ++bad;
            std::cerr << "  [7] k=" << k << " got " << to_string(got.decision) << "\n" << serialize_graph(g);
        }
    }
    return tally(checked, bad,
                 "randomized 2K2 decisions, " + std::to_string(separated) + " decided by colouring rounds");
}

std::string capture(const std::string &cmd)
{
    std::string out;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr)
        return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

Outcome determinism_suite()
{
    const auto dir = std::filesystem::temp_directory_path();
    const std::string graph = (dir / "sfc_acceptance_graph.txt").string();
    std::mt19937_64 rng(9008);
    write_text_file(graph, serialize_graph(random_graph(rng, "gnp", 10, 0.35)));
    const std::string exe = SFC_CLI_PATH;
    const std::vector<std::string> runs{
        exe + " --json --seed 17 solve " + graph + " -f qK2:2 -k 4 -a qk2",
        exe + " --json solve " + graph + " -f P3 -k 6",
        exe + " --json solve " + graph + " -f P4 -l 3 -a hitting-set",
        exe + " --json optimum " + graph + " -f K1t:3",
    };
    int identical = 0;
    for (const auto &cmd : runs) {
        const std::string a = capture(cmd), b = capture(cmd);
        identical += !a.empty() && a.front() == '{' && a == b;
    }
    std::ostringstream s;
    s << identical << '/' << runs.size() << " CLI invocations byte-identical across two runs";
    return {identical == static_cast<int>(runs.size()), s.str()};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle cross-validation", oracle_cross_validation},
        {"max-degree-4 triadic closure", stc_suite},
        {"K1,3 above matching", star_suite},
        {"weak-edge parameter", weak_suite},
        {"kernel bounds", kernel_suite},
        {"reduction fixtures", reduction_suite},
        {"randomized 2K2", qk2_suite},
        {"CLI determinism", determinism_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s [%zu] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
