#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "sfc/closure.hpp"
#include "sfc/error.hpp"
#include "sfc/pattern.hpp"
#include "support.hpp"

using namespace sfc;

namespace {

// Naive F-graph search: every |V(F)|-subset, two isomorphism checks.
std::vector<FGraphWitness> naive_f_graphs(const Graph &g, const EdgeSet &h, const Pattern &f)
{
    std::vector<FGraphWitness> out;
    const int n = g.num_vertices(), k = f.num_vertices();
    if (k > n)
        return out;
    std::vector<char> pick(n, 0);
    std::fill(pick.end() - k, pick.end(), 1);
    do {
        Bitset keep = g.vertex_set();
        std::vector<Vertex> s;
        for (int v = 0; v < n; ++v)
            if (pick[v]) {
                keep.set(v);
                s.push_back(v);
            }
        auto gs = induced_subgraph(g, keep);
        EdgeList hs;
        for (const Edge &e : gs.graph.edges()) {
            int idx = g.edge_index(gs.to_original[e.u], gs.to_original[e.v]);
            if (h.contains(idx))
                hs.push_back(e);
        }
        Graph hg(k, hs);
        if (isomorphic(gs.graph, f.graph) && isomorphic(hg, f.graph))
            out.push_back({s});
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

EdgeSet random_subset(std::mt19937_64 &rng, const Graph &g, double p)
{
    std::bernoulli_distribution coin(p);
    EdgeSet h(g);
    for (int e = 0; e < g.num_edges(); ++e)
        if (coin(rng))
            h.insert(e);
    return h;
}

const char *const kPatterns[] = {"P3", "pK1:3", "pK1qK2:1,1", "qK2:2", "pK1qK2:1,2", "K3", "P4", "K1t:3", "C4"};

} // namespace

TEST_CASE("classification")
{
    auto p = parse_pattern("pK1:3");
    CHECK(p.cls == PatternClass::PK1);
    CHECK(p.isolated == 3);
    p = parse_pattern("pK1qK2:1,1");
    CHECK(p.cls == PatternClass::PK1_K2);
    CHECK(p.isolated == 1);
    p = parse_pattern("qK2:2");
    CHECK(p.cls == PatternClass::PK1_QK2);
    CHECK(p.k2_components == 2);
    CHECK(p.isolated == 0);
    CHECK(parse_pattern("P3").cls == PatternClass::BigComponent);
    CHECK(parse_pattern("K1t:3").cls == PatternClass::BigComponent);
    CHECK(parse_pattern("pK1qK2:0,1").cls == PatternClass::PK1_K2);

    CHECK_THROWS_AS(classify(Graph(0)), InvalidInput);
    CHECK_THROWS_AS(classify(named::path(11)), ResourceLimit);
    CHECK_THROWS_AS(parse_pattern("qK2:6"), ResourceLimit);
    CHECK_THROWS_AS(parse_pattern("Q7"), InvalidInput);
    CHECK_THROWS_AS(parse_pattern("pK1qK2:3"), InvalidInput);
}

TEST_CASE("isomorphism")
{
    CHECK_FALSE(isomorphic(named::path(3), named::matching_plus_isolated(1, 1)));
    Graph k4_minus_pm(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(isomorphic(named::cycle(4), k4_minus_pm));
    CHECK_FALSE(isomorphic(named::cycle(6), disjoint_union(named::complete(3), named::complete(3))));

    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; ++i) {
        Graph g = testing::random_gnp(rng, 8, 0.4);
        std::vector<Vertex> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(isomorphic(g, permute(g, perm)));
    }
    CHECK_THROWS_AS(isomorphic(named::path(11), named::path(11)), ResourceLimit);
}

TEST_CASE("enumerate F-graphs examples")
{
    Pattern p3 = parse_pattern("P3");
    Graph k3 = named::complete(3);
    CHECK(enumerate_f_graphs(k3, EdgeSet::all(k3), p3).empty());
    Graph p4 = named::path(4);
    auto w = enumerate_f_graphs(p4, EdgeSet::all(p4), p3);
    REQUIRE(w.size() == 2);
    CHECK(w[0].vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(w[1].vertices == std::vector<Vertex>{1, 2, 3});
    Graph path3 = named::path(3);
    CHECK(enumerate_f_graphs(path3, EdgeSet(path3), p3).empty());
    CHECK(enumerate_f_graphs(p4, EdgeSet::all(p4), p3, 1).size() == 1);
}

TEST_CASE("satisfies closure examples")
{
    Pattern p3 = parse_pattern("P3");
    Graph path3 = named::path(3);
    CHECK_FALSE(satisfies_closure(path3, EdgeSet::all(path3), p3));
    Graph c5 = named::cycle(5);
    EdgeList two{{0, 1}, {1, 2}};
    CHECK_FALSE(satisfies_closure(c5, std::span<const Edge>(two), p3));
    Graph pet = named::petersen();
    EdgeList pm;
    for (const Edge &e : pet.edges())
        if (std::none_of(pm.begin(), pm.end(), [&](const Edge &x) { return x.u == e.u || x.v == e.u || x.u == e.v || x.v == e.v; }))
            pm.push_back(e);
    CHECK(satisfies_closure(pet, std::span<const Edge>(pm), p3));
    CHECK(satisfies_closure(pet, std::span<const Edge>(pm), parse_pattern("K1t:3")));
}

TEST_CASE("enumeration matches the naive subset loop")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<int> nd(2, 8);
        Graph g = testing::random_gnp(rng, nd(rng), 0.5);
        EdgeSet h = random_subset(rng, g, 0.6);
        for (const char *spec : kPatterns) {
            Pattern f = parse_pattern(spec);
            CHECK(enumerate_f_graphs(g, h, f) == naive_f_graphs(g, h, f));
        }
    }
}

TEST_CASE("closure is preserved when strong edges are dropped")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<int> nd(2, 8);
        Graph g = testing::random_gnp(rng, nd(rng), 0.5);
        EdgeSet h = random_subset(rng, g, 0.5);
        Pattern f = parse_pattern(kPatterns[i % std::size(kPatterns)]);
        if (!satisfies_closure(g, h, f))
            continue;
        for (int e : h.indices()) {
            EdgeSet smaller = h;
            smaller.erase(e);
            CHECK(satisfies_closure(g, smaller, f));
        }
    }
}

TEST_CASE("edgeless patterns ignore the strong edges")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        Graph g = testing::random_gnp(rng, 7, 0.6);
        for (int p = 1; p <= 4; ++p) {
            Pattern f = parse_pattern("pK1:" + std::to_string(p));
            CHECK(satisfies_closure(g, EdgeSet(g), f) == satisfies_closure(g, EdgeSet::all(g), f));
        }
    }
}

TEST_CASE("closure tracker agrees with direct checks")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        Graph g = testing::random_gnp(rng, 7, 0.5);
        Pattern f = parse_pattern(kPatterns[i % std::size(kPatterns)]);
        ClosureTracker t(g, f);
        EdgeSet h(g);
        for (int e = 0; e < g.num_edges(); ++e) {
            EdgeSet with = h;
            with.insert(e);
            const bool ok = satisfies_closure(g, with, f);
            if (!t.unbreakable())
                CHECK(t.can_add(e) == ok);
            if (ok && t.can_add(e)) {
                t.add(e);
                h = with;
            }
        }
        CHECK(t.strong_count() == h.size());
    }
}
