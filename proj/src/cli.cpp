#include "sfc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

#include "sfc/above_matching.hpp"
#include "sfc/closure.hpp"
#include "sfc/error.hpp"
#include "sfc/io.hpp"
#include "sfc/matching.hpp"
#include "sfc/oracle.hpp"
#include "sfc/reductions.hpp"
#include "sfc/weak_param.hpp"

namespace sfc {

namespace {

    using json = nlohmann::ordered_json;

    // Thrown for option combinations that make no sense; maps to exit_usage.
    class UsageError : public std::runtime_error {
    public:
        using std::runtime_error::runtime_error;
    };

    Graph load_graph(const RunConfig &cfg, std::istream &in)
    {
        if (cfg.graph_path.empty())
            throw UsageError("a graph file is required (use - for stdin)");
        if (cfg.graph_path == "-") {
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            return parse_graph(text);
        }
        return read_graph_file(cfg.graph_path);
    }

    void emit(const RunConfig &cfg, std::ostream &out, const std::string &text)
    {
        if (cfg.output_path.empty())
            out << text;
        else
            write_text_file(cfg.output_path, text);
    }

    json edges_json(const EdgeList &edges)
    {
        json arr = json::array();
        for (const Edge &e : edges)
            arr.push_back({e.u + 1, e.v + 1});
        return arr;
    }

    bool is_star(const Pattern &f, int &t)
    {
        t = f.num_vertices() - 1;
        return t >= 1 && f.num_edges() == t && isomorphic(f.graph, named::star(t));
    }

    int exit_for(Decision d)
    {
        switch (d) {
        case Decision::Yes:
            return exit_yes;
        case Decision::No:
            return exit_no;
        case Decision::Inconclusive:
            break;
        }
        return exit_inconclusive;
    }

    // k from --k, or m - l from --l
    int resolve_k(const RunConfig &cfg, const Graph &g)
    {
        if (cfg.k && cfg.l)
            throw UsageError("give either --k or --l, not both");
        if (cfg.k)
            return *cfg.k;
        if (cfg.l)
            return std::max(0, g.num_edges() - *cfg.l);
        throw UsageError("this command needs --k or --l");
    }

    SolveReport dispatch(const RunConfig &cfg, const Graph &g, const Pattern &f)
    {
        const std::string &alg = cfg.algorithm;
        const bool weak = alg == "weak-branch" || alg == "hitting-set" || (alg == "auto" && cfg.l && !cfg.k);
        if (weak) {
            if (cfg.k)
                throw UsageError("algorithm '" + alg + "' takes --l (the number of weak edges), not --k");
            if (!cfg.l)
                throw UsageError("algorithm '" + alg + "' needs --l");
            if (f.num_edges() == 0)
                throw Unsupported("the weak-edge parameter needs a pattern with at least one edge");
            return alg == "hitting-set" ? solve_via_hitting_set(g, f, *cfg.l, cfg.budget)
                                        : solve_weak_branching(g, f, *cfg.l, cfg.budget);
        }
        const int k = resolve_k(cfg, g);
        if (alg == "auto")
            return solve_by_k(g, f, k, cfg.seed, cfg.budget);
        if (alg == "oracle")
            return solve_exact(g, f, k, cfg.budget);
        if (alg == "big-component") {
            if (f.cls != PatternClass::BigComponent)
                throw Unsupported("big-component needs a pattern with a component on at least 3 vertices");
            return solve_big_component(g, f, k, cfg.budget);
        }
        if (alg == "qk2") {
            if (f.cls != PatternClass::PK1_QK2 || f.isolated != 0)
                throw Unsupported("qk2 needs a pattern made of q >= 2 disjoint edges");
            return solve_qk2(g, f.k2_components, k, cfg.seed);
        }
        if (alg == "pk1qk2") {
            if (f.cls != PatternClass::PK1_QK2)
                throw Unsupported("pk1qk2 needs isolated vertices plus q >= 2 disjoint edges");
            return solve_pk1_qk2(g, f.isolated, f.k2_components, k, cfg.seed, cfg.budget);
        }
        if (alg == "stc-deg4") {
            if (f.num_vertices() != 3 || !isomorphic(f.graph, named::path(3)))
                throw Unsupported("stc-deg4 needs the pattern P3");
            return solve_stc_maxdeg4(g, k, cfg.budget);
        }
        if (alg == "star-above-matching") {
            int t = 0;
            if (!is_star(f, t) || t < 3)
                throw Unsupported("star-above-matching needs the pattern K1t with t >= 3");
            return solve_star_above_matching(g, t, k, cfg.budget);
        }
        throw UsageError("unknown algorithm '" + alg + "'");
    }

    void check_witness(const Graph &g, const Pattern &f, const SolveReport &rep)
    {
        if (rep.yes() && !satisfies_closure(g, std::span<const Edge>(rep.witness), f))
            throw std::logic_error("witness failed re-validation");
    }

    void print_human(std::ostream &out, const SolveReport &rep)
    {
        out << "decision: " << to_string(rep.decision) << '\n';
        out << "algorithm: " << rep.algorithm << '\n';
        if (rep.optimum)
            out << "optimum: " << *rep.optimum << '\n';
        if (rep.yes()) {
            out << "strong edges (" << rep.witness.size() << "):";
            for (const Edge &e : rep.witness)
                out << ' ' << e.u + 1 << '-' << e.v + 1;
            out << '\n';
        }
        out << "nodes: " << rep.stats.nodes << '\n';
        for (const auto &[name, count] : rep.stats.rules)
            out << "rule " << name << ": " << count << '\n';
        for (const auto &line : rep.trace)
            out << "trace: " << line << '\n';
    }

    int finish_report(const RunConfig &cfg, std::ostream &out, const Graph &g, const Pattern &f,
                      const SolveReport &rep, std::optional<int> k)
    {
        check_witness(g, f, rep);
        if (cfg.json)
            out << report_json(rep, f, k, cfg.l, cfg.timing).dump(2) << '\n';
        else
            print_human(out, rep);
        return exit_for(rep.decision);
    }

    int cmd_solve(const RunConfig &cfg, std::istream &in, std::ostream &out)
    {
        const Graph g = load_graph(cfg, in);
        const Pattern f = parse_pattern(cfg.pattern);
        const SolveReport rep = dispatch(cfg, g, f);
        return finish_report(cfg, out, g, f, rep, cfg.k);
    }

    int cmd_oracle(const RunConfig &cfg, std::istream &in, std::ostream &out)
    {
        const Graph g = load_graph(cfg, in);
        const Pattern f = parse_pattern(cfg.pattern);
        const int k = resolve_k(cfg, g);
        return finish_report(cfg, out, g, f, solve_exact(g, f, k, cfg.budget), k);
    }

    int cmd_optimum(const RunConfig &cfg, std::istream &in, std::ostream &out)
    {
        const Graph g = load_graph(cfg, in);
        const Pattern f = parse_pattern(cfg.pattern);
        SolveReport rep = optimum(g, f, cfg.budget);
        check_witness(g, f, rep);
        if (cfg.json)
            out << report_json(rep, f, std::nullopt, std::nullopt, cfg.timing).dump(2) << '\n';
        else
            print_human(out, rep);
        return rep.inconclusive() ? exit_inconclusive : exit_yes;
    }

    int cmd_kernelize(const RunConfig &cfg, std::istream &in, std::ostream &out)
    {
        const Graph g = load_graph(cfg, in);
        const Pattern f = parse_pattern(cfg.pattern);
        if (f.cls != PatternClass::BigComponent)
            throw Unsupported("kernelize needs a pattern with a component on at least 3 vertices");
        if (!cfg.k)
            throw UsageError("kernelize needs --k");
        const DegenerateKernel dk = degenerate_kernel_bound(g, f, *cfg.k);
        const KernelOutput &kern = dk.kernel;
        const std::string text = serialize_graph(kern.graph, "kernel k=" + std::to_string(kern.k));
        if (cfg.json) {
            json j;
            j["pattern"] = f.name.empty() ? cfg.pattern : f.name;
            j["k"] = *cfg.k;
            j["kernel_k"] = kern.k;
            j["vertices"] = kern.graph.num_vertices();
            j["edges"] = kern.graph.num_edges();
            j["twin_removals"] = kern.twin_removals;
            j["matching_size"] = kern.matching_size;
            j["vertex_bound"] = kern.vertex_bound;
            j["degeneracy"] = dk.degeneracy;
            j["degenerate_bound"] = dk.bound;
            json map = json::array();
            for (Vertex v : kern.to_original)
                map.push_back(v + 1);
            j["to_original"] = map;
            j["early_decision"] = kern.early ? json(std::string(to_string(kern.early->decision))) : json(nullptr);
            j["graph"] = text;
            out << j.dump(2) << '\n';
        } else {
            out << "c twin removals: " << kern.twin_removals << '\n';
            out << "c greedy matching: " << kern.matching_size << '\n';
            out << "c vertex bound: " << kern.vertex_bound << '\n';
            out << "c degeneracy " << dk.degeneracy << ", degenerate bound " << dk.bound << '\n';
            if (kern.early)
                out << "c early decision: " << to_string(kern.early->decision) << '\n';
            out << text;
        }
        return exit_yes;
    }

    int cmd_reduce(const RunConfig &cfg, std::istream &in, std::ostream &out)
    {
        json j;
        j["reduction"] = cfg.reduction;
        std::string text;
        if (cfg.reduction == "split") {
            if (cfg.input_path.empty())
                throw UsageError("split needs --input with a set packing instance");
            SetPackingInstance inst = parse_set_packing(read_text_file(cfg.input_path));
            if (cfg.pad && (inst.k + inst.t) % 2 != 0)
                inst = pad_universe(inst);
            const SplitReduction red = gen_split_from_set_packing(inst);
            text = serialize_graph(red.graph, "split graph, k'=" + std::to_string(red.k));
            j["k"] = red.k;
            auto block = [](const std::vector<Vertex> &vs) {
                json arr = json::array();
                for (Vertex v : vs)
                    arr.push_back(v + 1);
                return arr;
            };
            j["layout"] = {{"U", block(red.layout.u)},
                           {"Y", block(red.layout.y)},
                           {"X", block(red.layout.x)},
                           {"W", block(red.layout.w)}};
        } else if (cfg.reduction == "planar") {
            if (cfg.input_path.empty())
                throw UsageError("planar needs --input with an X3C instance");
            const PlanarReduction red = gen_planar_from_x3c(parse_x3c(read_text_file(cfg.input_path)));
            text = serialize_graph(red.graph, "planar gadget graph, target=" + std::to_string(red.target));
            j["target"] = red.target;
        } else if (cfg.reduction == "double-star") {
            RunConfig src = cfg;
            src.graph_path = cfg.input_path.empty() ? cfg.graph_path : cfg.input_path;
            const Graph g = gen_pk1k2_from_independent_set(load_graph(src, in), cfg.p);
            text = serialize_graph(g, "double star added, p=" + std::to_string(cfg.p) + ", k=1");
            j["k"] = 1;
            j["pattern"] = "pK1qK2:" + std::to_string(cfg.p) + ",1";
        } else {
            throw UsageError("unknown reduction '" + cfg.reduction + "' (split, planar, double-star)");
        }
        if (cfg.json) {
            j["graph"] = text;
            emit(cfg, out, j.dump(2) + "\n");
        } else {
            emit(cfg, out, text);
        }
        return exit_yes;
    }

    int cmd_gen_random(const RunConfig &cfg, std::ostream &out)
    {
        std::mt19937_64 rng(cfg.seed);
        const Graph g = gen_random(cfg, rng);
        emit(cfg, out, serialize_graph(g, cfg.model + " n=" + std::to_string(cfg.n) + " seed=" +
                                              std::to_string(cfg.seed)));
        return exit_yes;
    }

    struct BenchRow {
        std::string algorithm;
        SolveReport rep;
        double millis;
    };

    template <typename Fn>
    BenchRow timed(std::string name, Fn &&fn)
    {
        const auto start = std::chrono::steady_clock::now();
        SolveReport rep = fn();
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return {std::move(name), std::move(rep), ms};
    }

    int cmd_bench(const RunConfig &cfg, std::ostream &out, std::ostream &err)
    {
        if (cfg.instances < 0)
            throw InvalidInput("--instances must be non-negative");
        std::ostringstream csv;
        csv << "instance,algorithm,decision,nodes,millis\n";
        const Pattern p3 = classify(named::path(3), "P3");
        int mismatches = 0;
        for (int i = 0; i < cfg.instances; ++i) {
            std::mt19937_64 rng(cfg.seed + static_cast<std::uint64_t>(i));
            RunConfig gen = cfg;
            std::vector<BenchRow> rows;
            if (cfg.corpus == "stc-deg4") {
                gen.model = "max-deg";
                const Graph g = gen_random(gen, rng);
                const int k = max_matching(g).size() + 1;
                rows.push_back(timed("stc-deg4", [&] { return solve_stc_maxdeg4(g, k, cfg.budget); }));
                rows.push_back(timed("oracle", [&] { return solve_exact(g, p3, k, cfg.budget); }));
            } else if (cfg.corpus == "star") {
                const Graph g = gen_random(gen, rng);
                const int k = max_matching(g).size() + 1;
                const Pattern f = classify(named::star(3));
                rows.push_back(timed("star-above-matching", [&] { return solve_star_above_matching(g, 3, k, cfg.budget); }));
                rows.push_back(timed("oracle", [&] { return solve_exact(g, f, k, cfg.budget); }));
            } else if (cfg.corpus == "qk2") {
                const Graph g = gen_random(gen, rng);
                const int k = std::min(g.num_edges(), 4);
                const Pattern f = classify(named::matching_plus_isolated(0, 2));
                rows.push_back(timed("qk2", [&] { return solve_qk2(g, 2, k, cfg.seed); }));
                rows.push_back(timed("oracle", [&] { return solve_exact(g, f, k, cfg.budget); }));
            } else if (cfg.corpus == "weak") {
                const Graph g = gen_random(gen, rng);
                const int l = cfg.l.value_or(2);
                rows.push_back(timed("weak-branch", [&] { return solve_weak_branching(g, p3, l, cfg.budget); }));
                rows.push_back(timed("hitting-set", [&] { return solve_via_hitting_set(g, p3, l, cfg.budget); }));
                rows.push_back(timed("oracle", [&] {
                    return solve_exact(g, p3, std::max(0, g.num_edges() - l), cfg.budget);
                }));
            } else if (cfg.corpus == "big-component") {
                const Graph g = gen_random(gen, rng);
                const int k = cfg.k.value_or(3);
                rows.push_back(timed("big-component", [&] { return solve_big_component(g, p3, k, cfg.budget); }));
                rows.push_back(timed("oracle", [&] { return solve_exact(g, p3, k, cfg.budget); }));
            } else {
                throw UsageError("unknown corpus '" + cfg.corpus + "' (stc-deg4, star, qk2, weak, big-component)");
            }
            for (const auto &row : rows) {
                csv << i << ',' << row.algorithm << ',' << to_string(row.rep.decision) << ','
                    << row.rep.stats.nodes << ',' << row.millis << '\n';
                if (!row.rep.inconclusive() && !rows.back().rep.inconclusive() &&
                    row.rep.decision != rows.back().rep.decision)
                    ++mismatches;
            }
        }
        emit(cfg, out, csv.str());
        if (mismatches > 0) {
            err << "bench: " << mismatches << " decisions disagree with the exact search\n";
            return exit_internal;
        }
        return exit_yes;
    }

} // namespace

json report_json(const SolveReport &rep, const Pattern &f, std::optional<int> k, std::optional<int> l, bool timing)
{
    json j;
    j["decision"] = std::string(to_string(rep.decision));
    j["k"] = k ? json(*k) : json(nullptr);
    if (l)
        j["l"] = *l;
    j["pattern"] = f.name;
    j["algorithm"] = rep.algorithm;
    j["vertex_base"] = 1;
    j["witness"] = edges_json(rep.witness);
    if (rep.optimum)
        j["optimum"] = *rep.optimum;
    json rules = json::object();
    for (const auto &[name, count] : rep.stats.rules)
        rules[name] = count;
    j["stats"] = {{"nodes", rep.stats.nodes},
                  {"rules", rules},
                  {"millis", timing ? json(rep.stats.millis) : json(nullptr)}};
    if (rep.miss_probability)
        j["miss_probability"] = *rep.miss_probability;
    j["trace"] = rep.trace;
    j["inconclusive"] = rep.inconclusive();
    return j;
}

Graph gen_random(const RunConfig &cfg, std::mt19937_64 &rng)
{
    const int n = cfg.n;
    if (n < 0)
        throw InvalidInput("n must be non-negative");
    if (cfg.edge_probability < 0 || cfg.edge_probability > 1)
        throw InvalidInput("edge probability must lie in [0, 1]");
    std::bernoulli_distribution coin(cfg.edge_probability);
    GraphBuilder b(n);
    if (cfg.model == "gnp") {
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    b.add_edge(u, v);
        return b.build();
    }
    if (cfg.model == "max-deg") {
        const int cap = cfg.max_degree;
        if (cap < 0)
            throw InvalidInput("maximum degree must be non-negative");
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        if (cfg.edges) {
            const long long want = *cfg.edges;
            const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
            if (want < 0 || want > static_cast<long long>(n) * cap / 2 || want > pairs)
                throw InvalidInput("cannot place " + std::to_string(want) + " edges with maximum degree " +
                                   std::to_string(cap) + " on " + std::to_string(n) + " vertices");
            // rejection sampling, restarting when the greedy placement gets stuck
            for (int attempt = 0; attempt < 1000; ++attempt) {
                GraphBuilder tryb(n);
                std::fill(deg.begin(), deg.end(), 0);
                long long placed = 0;
                std::uniform_int_distribution<int> pick(0, std::max(0, n - 1));
                for (long long tries = 0; placed < want && tries < 200 * (want + 1); ++tries) {
                    const Vertex u = pick(rng), v = pick(rng);
                    if (u == v || deg[u] >= cap || deg[v] >= cap || tryb.has_edge(u, v))
                        continue;
                    tryb.add_edge(u, v);
                    ++deg[u];
                    ++deg[v];
                    ++placed;
                }
                if (placed == want)
                    return tryb.build();
            }
            throw InvalidInput("could not place the requested edges under the degree cap");
        }
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        for (auto [u, v] : pairs)
            if (deg[u] < cap && deg[v] < cap && coin(rng)) {
                b.add_edge(u, v);
                ++deg[u];
                ++deg[v];
            }
        return b.build();
    }
    if (cfg.model == "d-degenerate") {
        const int d = cfg.degeneracy;
        if (d < 0)
            throw InvalidInput("degeneracy must be non-negative");
        std::vector<Vertex> label(static_cast<std::size_t>(n));
        std::iota(label.begin(), label.end(), 0);
        std::shuffle(label.begin(), label.end(), rng);
        std::vector<Vertex> earlier;
        for (int i = 0; i < n; ++i) {
            std::vector<Vertex> back = earlier;
            std::shuffle(back.begin(), back.end(), rng);
            back.resize(std::min<std::size_t>(back.size(), static_cast<std::size_t>(d)));
            for (Vertex w : back)
                if (coin(rng))
                    b.add_edge(label[i], w);
            earlier.push_back(label[i]);
        }
        return b.build();
    }
    throw InvalidInput("unknown model '" + cfg.model + "' (gnp, max-deg, d-degenerate)");
}

int run(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err)
{
    try {
        if (cfg.command == "solve")
            return cmd_solve(cfg, in, out);
        if (cfg.command == "oracle")
            return cmd_oracle(cfg, in, out);
        if (cfg.command == "optimum")
            return cmd_optimum(cfg, in, out);
        if (cfg.command == "kernelize")
            return cmd_kernelize(cfg, in, out);
        if (cfg.command == "reduce")
            return cmd_reduce(cfg, in, out);
        if (cfg.command == "gen-random")
            return cmd_gen_random(cfg, out);
        if (cfg.command == "bench")
            return cmd_bench(cfg, out, err);
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError &e) {
        err << "format error: " << e.what() << '\n';
        return exit_format;
    } catch (const InvalidInput &e) {
        err << "invalid input: " << e.what() << '\n';
        return exit_format;
    } catch (const Unsupported &e) {
        err << "unsupported: " << e.what() << '\n';
        return exit_unsupported;
    } catch (const ResourceLimit &e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

} // namespace sfc
