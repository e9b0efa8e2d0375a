#include <iostream>

#include "CLI11.hpp"

#include "sfc/cli.hpp"

namespace {

void add_problem_options(CLI::App *cmd, sfc::RunConfig &cfg, bool with_algorithm)
{
    cmd->add_option("graph", cfg.graph_path, "graph file (p/e format, 1-based), - for stdin")->required();
    cmd->add_option("-f,--pattern", cfg.pattern, "pattern: P3, K3, pK1:<p>, qK2:<q>, pK1qK2:<p>,<q>, K1t:<t>, file:<path>")
        ->capture_default_str();
    cmd->add_option("-k,--k", cfg.k, "minimum number of strong edges");
    cmd->add_option("-l,--l", cfg.l, "maximum number of weak edges");
    if (with_algorithm)
        cmd->add_option("-a,--algorithm", cfg.algorithm, "algorithm")
            ->check(CLI::IsMember({"auto", "oracle", "big-component", "qk2", "pk1qk2", "stc-deg4",
                                   "star-above-matching", "weak-branch", "hitting-set"}))
            ->capture_default_str();
}

} // namespace

int main(int argc, char **argv)
{
    sfc::RunConfig cfg;
    CLI::App app{"Strong F-closure solver"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--budget", cfg.budget, "search node budget")->capture_default_str();
    app.add_flag("--json", cfg.json, "JSON report");
    app.add_flag("--timing", cfg.timing, "include wall-clock time in the report");
    app.add_option("-o,--output", cfg.output_path, "write generated output to a file");

    auto *solve = app.add_subcommand("solve", "decide whether k strong edges are possible");
    add_problem_options(solve, cfg, true);
    auto *oracle = app.add_subcommand("oracle", "exact branch and bound decision");
    add_problem_options(oracle, cfg, false);
    auto *opt = app.add_subcommand("optimum", "maximum number of strong edges");
    opt->add_option("graph", cfg.graph_path, "graph file")->required();
    opt->add_option("-f,--pattern", cfg.pattern, "pattern")->capture_default_str();
    auto *kern = app.add_subcommand("kernelize", "twin reduction kernel");
    kern->add_option("graph", cfg.graph_path, "graph file")->required();
    kern->add_option("-f,--pattern", cfg.pattern, "pattern")->capture_default_str();
    kern->add_option("-k,--k", cfg.k, "minimum number of strong edges")->required();

    auto *reduce = app.add_subcommand("reduce", "build a hard instance from a source problem");
    reduce->add_option("reduction", cfg.reduction, "split, planar or double-star")
        ->check(CLI::IsMember({"split", "planar", "double-star"}))
        ->required();
    reduce->add_option("input", cfg.input_path, "set packing, X3C or graph file")->required();
    reduce->add_option("-p", cfg.p, "star size for double-star")->capture_default_str();
    reduce->add_flag("--pad", cfg.pad, "pad the universe when k + t is odd");

    auto *gen = app.add_subcommand("gen-random", "random graph");
    auto add_gen = [&](CLI::App *cmd) {
        cmd->add_option("--model", cfg.model, "gnp, max-deg or d-degenerate")
            ->check(CLI::IsMember({"gnp", "max-deg", "d-degenerate"}))
            ->capture_default_str();
        cmd->add_option("-n", cfg.n, "vertices")->capture_default_str();
        cmd->add_option("-p,--prob", cfg.edge_probability, "edge probability")->capture_default_str();
        cmd->add_option("-m,--edges", cfg.edges, "exact edge count (max-deg only)");
        cmd->add_option("--max-degree", cfg.max_degree, "degree cap")->capture_default_str();
        cmd->add_option("-d,--degeneracy", cfg.degeneracy, "back-edges per vertex")->capture_default_str();
    };
    add_gen(gen);

    auto *bench = app.add_subcommand("bench", "run a seeded corpus and print CSV");
    bench->add_option("--corpus", cfg.corpus, "stc-deg4, star, qk2, weak or big-component")->capture_default_str();
    bench->add_option("--instances", cfg.instances, "number of instances")->capture_default_str();
    bench->add_option("-k,--k", cfg.k, "k for the big-component corpus");
    bench->add_option("-l,--l", cfg.l, "l for the weak corpus");
    add_gen(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sfc::exit_usage;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    return sfc::run(cfg, std::cin, std::cout, std::cerr);
}
