#pragma once

#include <obstruct/canonical.hpp>
#include <obstruct/generator.hpp>
#include <obstruct/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace obstruct::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
    ok = 0,
    usage = 1,
    truncated = 2,
    oracle_mismatch = 3,
    reproduction_mismatch = 4,
};

/// Runs the tool with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A graph name such as "C5" or "S2,2,1", or else a graph6 string.
Graph parse_graph_literal(std::string_view text);

/// Budgets written as "1000000", "10^6" or "1e6".
std::uint64_t parse_count(std::string_view text);

/// Sorts by order, then certificate, and drops isomorphic repeats.
std::vector<Graph> normalize(std::vector<Graph> graphs);

std::map<std::size_t, std::size_t> counts_by_order(const std::vector<Graph>& graphs);

/// "{3:1, 8:4}".
std::string format_counts(const std::map<std::size_t, std::size_t>& counts);

/// One generation run of a reproduction recipe.
struct RecipeStep {
    std::string seed;
    GenerationConfig config;
};

/// A named reproduction: the runs to perform, the expected census and,
/// where available, the expected graphs up to isomorphism.
struct Recipe {
    std::string name;
    std::vector<RecipeStep> steps;
    std::map<std::size_t, std::size_t> expected_counts;
    std::vector<Graph> expected_graphs;
};

/// Recipes for "p6", "p7", "p8", "s221" and "s311". Throws ParameterError
/// for other names.
Recipe recipe(std::string_view name);

struct RecipeOutcome {
    std::vector<Graph> obstructions; // normalized
    std::vector<GenerationReport> reports;
    bool complete = true;
    bool counts_match = false;
    bool graphs_match = false;
    bool verified = false; // every output re-checked with both oracles
    double seconds = 0;
};

RecipeOutcome run_recipe(const Recipe& r, unsigned workers = 1, std::ostream* progress = nullptr);

} // namespace obstruct::cli
