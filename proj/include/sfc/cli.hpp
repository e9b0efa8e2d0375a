#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include "json.hpp"

#include "sfc/graph.hpp"
#include "sfc/pattern.hpp"
#include "sfc/report.hpp"
#include "sfc/solver_k.hpp"

namespace sfc {

// Process exit codes.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_inconclusive = 2;
inline constexpr int exit_usage = 10;
inline constexpr int exit_format = 11;
inline constexpr int exit_unsupported = 12;
inline constexpr int exit_resource = 13;
inline constexpr int exit_internal = 14;

struct RunConfig {
    std::string command = "solve"; ///< solve | optimum | kernelize | reduce | gen-random | bench | oracle
    std::string graph_path;        ///< "-" reads the input stream
    std::string pattern = "P3";
    std::optional<int> k;
    std::optional<int> l;
    std::string algorithm = "auto";
    std::uint64_t seed = default_seed;
    std::uint64_t budget = default_node_budget;
    bool json = false;
    bool timing = false; ///< report wall-clock millis (omitted by default for reproducible output)

    // reduce
    std::string reduction;  ///< split | planar | double-star
    std::string input_path; ///< set packing / X3C instance, or a graph for double-star
    int p = 1;
    bool pad = false;

    // gen-random and bench
    std::string model = "gnp"; ///< gnp | max-deg | d-degenerate
    int n = 10;
    double edge_probability = 0.5;
    std::optional<int> edges;
    int max_degree = 4;
    int degeneracy = 2;
    std::string corpus = "stc-deg4"; ///< stc-deg4 | star | qk2 | weak | big-component
    int instances = 20;
    std::string output_path;
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
int run(const RunConfig &cfg, std::istream &in, std::ostream &out, std::ostream &err);

/// Report fields: decision, k, pattern, algorithm, witness (1-based, sorted),
/// optimum (when computed), stats{nodes, rules, millis}, inconclusive.
nlohmann::ordered_json report_json(const SolveReport &rep, const Pattern &f, std::optional<int> k,
                                   std::optional<int> l, bool timing);

/// Deterministic random graph for a model name; throws InvalidInput on bad parameters.
Graph gen_random(const RunConfig &cfg, std::mt19937_64 &rng);

} // namespace sfc
