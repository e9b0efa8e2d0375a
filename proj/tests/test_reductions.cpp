#include "doctest.h"

#include <random>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"
#include "sfc/graph_algorithms.hpp"
#include "sfc/oracle.hpp"
#include "sfc/reductions.hpp"
#include "support.hpp"

using namespace sfc;

namespace {

const Pattern &p3()
{
    static const Pattern p = classify(named::path(3));
    return p;
}

// all multisets of `p` nonempty subsets of {0..t-1}
void for_each_family(int t, int p, const std::function<void(const std::vector<std::vector<int>> &)> &fn)
{
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << t); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < t; ++i)
            if (mask >> i & 1)
                s.push_back(i);
        subsets.push_back(s);
    }
    std::vector<std::vector<int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == p) {
            fn(cur);
            return;
        }
        for (std::size_t i = from; i < subsets.size(); ++i) {
            cur.push_back(subsets[i]);
            rec(i);
            cur.pop_back();
        }
    };
    rec(0);
}

bool independent_set_exists(const Graph &g, int p)
{
    Bitset all = g.vertex_set();
    all.set_all();
    return has_independent_set(g, all, p);
}

} // namespace

TEST_CASE("split construction examples")
{
    SetPackingInstance inst{2, {{0}, {1}}, 2};
    const SplitReduction red = gen_split_from_set_packing(inst);
    CHECK(red.graph.num_vertices() == 8);
    CHECK(red.k == 8);
    std::vector<Vertex> clique = red.layout.u, indep = red.layout.x;
    clique.insert(clique.end(), red.layout.y.begin(), red.layout.y.end());
    indep.insert(indep.end(), red.layout.w.begin(), red.layout.w.end());
    CHECK(is_split_partition(red.graph, clique, indep));
    CHECK(has_set_packing(inst));
    CHECK(solve_exact(red.graph, p3(), red.k).yes());
    // w_j misses exactly its own set inside U
    CHECK_FALSE(red.graph.adjacent(red.layout.w[0], red.layout.u[0]));
    CHECK(red.graph.adjacent(red.layout.w[0], red.layout.u[1]));
    CHECK_FALSE(red.graph.adjacent(red.layout.x[1], red.layout.y[1]));

    inst.k = 1;
    CHECK_THROWS_AS(gen_split_from_set_packing(inst), InvalidInput);
    const auto padded = pad_universe(inst);
    CHECK(padded.t == 3);
    CHECK_NOTHROW(gen_split_from_set_packing(padded));
    CHECK(has_set_packing(padded) == has_set_packing(inst));
    CHECK_THROWS_AS(gen_split_from_set_packing({2, {{}}, 0}), InvalidInput);
    CHECK_THROWS_AS(gen_split_from_set_packing({2, {{0, 2}}, 0}), InvalidInput);
}

TEST_CASE("planar construction examples")
{
    const X3CInstance one{1, {{0, 1, 2}}};
    const PlanarReduction red = gen_planar_from_x3c(one);
    CHECK(red.graph.num_vertices() == 12);
    CHECK(red.graph.num_edges() == 18);
    CHECK(red.target == 12);
    CHECK(is_planar(red.graph));
    CHECK(has_exact_cover(one));
    CHECK(*optimum(red.graph, p3()).optimum >= red.target);
    CHECK(twins_agree(red.graph, optimum(red.graph, p3()).witness));
    CHECK_THROWS_AS(gen_planar_from_x3c({1, {{0, 1, 1}}}), InvalidInput);
    CHECK_THROWS_AS(gen_planar_from_x3c({1, {{0, 1, 3}}}), InvalidInput);
    CHECK_FALSE(is_planar(named::complete(5)));
    CHECK(is_planar(named::complete(4)));
    CHECK_FALSE(is_planar(named::petersen()));
}

TEST_CASE("double star generator")
{
    const Graph g = gen_pk1k2_from_independent_set(named::complete(3), 2);
    CHECK(g.num_vertices() == 9);
    CHECK(g.num_edges() == 3 + 5);
    const Pattern f = classify(named::matching_plus_isolated(2, 1));
    CHECK(solve_exact(g, f, 1).yes());
    CHECK(solve_exact(gen_pk1k2_from_independent_set(named::empty(2), 2), f, 1).no());
    for (int p = 1; p <= 4; ++p)
        CHECK(gen_pk1k2_from_independent_set(Graph(0), p).num_edges() == 2 * p + 1);
    CHECK_THROWS_AS(gen_pk1k2_from_independent_set(Graph(0), 0), InvalidInput);
}

TEST_CASE("double star equivalence on random graphs")
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 50; ++it) {
        const int p = 1 + static_cast<int>(rng() % 3);
        const Graph g = testing::random_gnp(rng, 1 + static_cast<int>(rng() % 6), 0.5);
        const Graph big = gen_pk1k2_from_independent_set(g, p);
        const Pattern f = classify(named::matching_plus_isolated(p, 1));
        CHECK(solve_exact(big, f, 1).yes() == !independent_set_exists(g, p));
    }
}

TEST_CASE("split equivalence on small set packing instances")
{
    int instances = 0, disagreements = 0, twin_failures = 0;
    for (int t = 1; t <= 3; ++t)
        for (int p = 1; p <= 3; ++p)
            for_each_family(t, p, [&](const std::vector<std::vector<int>> &sets) {
                for (int k = 0; k <= p + 1; ++k) {
                    if ((k + t) % 2)
                        continue;
                    const SetPackingInstance inst{t, sets, k};
                    const SplitReduction red = gen_split_from_set_packing(inst);
                    const SolveReport r = solve_exact(red.graph, p3(), red.k);
                    REQUIRE(!r.inconclusive());
                    ++instances;
                    disagreements += r.yes() != has_set_packing(inst);
                    const SolveReport best = optimum(red.graph, p3());
                    twin_failures += !twins_agree(red.graph, best.witness);
                }
            });
    MESSAGE(instances << " instances");
    CHECK(disagreements == 0);
    CHECK(twin_failures == 0);
}

TEST_CASE("planar equivalence with two triplets")
{
    const X3CInstance cover{1, {{0, 1, 2}, {0, 1, 2}}};
    const X3CInstance none{2, {{0, 1, 2}, {2, 3, 4}}};
    for (const auto &inst : {cover, none}) {
        const PlanarReduction red = gen_planar_from_x3c(inst);
        CHECK(red.target == 9 * static_cast<int>(inst.triplets.size()) + 3 * inst.q);
        const SolveReport r = solve_exact(red.graph, p3(), red.target);
        REQUIRE(!r.inconclusive());
        CHECK(r.yes() == has_exact_cover(inst));
    }
}

TEST_CASE("text formats")
{
    const SetPackingInstance sp{3, {{0, 2}, {1}}, 1};
    const auto back = parse_set_packing(serialize_set_packing(sp));
    CHECK(back.t == 3);
    CHECK(back.k == 1);
    CHECK(back.sets == sp.sets);
    CHECK(serialize_set_packing(sp) == "3 2 1\n1 3\n2\n");
    CHECK_THROWS_AS(parse_set_packing("3 2 1\n1 4\n2\n"), ParseError);
    CHECK_THROWS_AS(parse_set_packing("3 2 1\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_set_packing("3 1 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_set_packing("3 1\n"), ParseError);

    const X3CInstance x{2, {{0, 1, 2}, {3, 4, 5}}};
    const auto xb = parse_x3c("c two triplets\n" + serialize_x3c(x));
    CHECK(xb.q == 2);
    CHECK(xb.triplets == x.triplets);
    CHECK_THROWS_AS(parse_x3c("1 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_x3c("1 1\n1 2 2\n"), ParseError);
    try {
        parse_x3c("1 2\n1 2 3\n\n1 2 9\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 4);
    }
}
