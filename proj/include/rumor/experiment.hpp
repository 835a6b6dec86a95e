#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rumor/graph.hpp"
#include "rumor/inference.hpp"
#include "rumor/tree_sim.hpp"

namespace rumor {

struct ExperimentSpec {
    GeneratorSpec gen;
    std::vector<double> p_grid;
    std::vector<int> rounds;
    int runs_per_cell = 100;
    std::uint64_t master_seed = 0;
    bool fixed_graph = false; // reuse one graph instance instead of one per run
    int threads = 0;          // 0 = hardware concurrency
};

struct RunRecord {
    double p = 0.0;
    int t = 0;
    int run = 0;
    RunClassification classification = RunClassification::Empty;
    NodeId source = 0;
    NodeId t_prime = 0;
    std::size_t active_size = 0;
    std::vector<NodeId> candidate_distances;
};

struct SummaryRow {
    double p = 0.0;
    int t = 0;
    int successes = 0;
    int wrong = 0;
    int empty = 0;
    int singleton_runs = 0; // |X*| = 1, resolved by the general rule
    bool has_distances = false;
    double avg_distance_pooled = 0.0;  // over all candidate-run pairs
    double avg_distance_per_run = 0.0; // per-run average, then across runs
    NodeId max_distance = 0;
};

struct SweepResult {
    std::vector<SummaryRow> rows;
    std::vector<RunRecord> records;
};

// For each (p, t) cell runs runs_per_cell independent cascade+inference runs,
// each on its own rng stream (and, unless fixed_graph, its own fresh graph).
// Output is deterministic in master_seed regardless of thread count.
SweepResult run_sweep(const ExperimentSpec& spec);

// Pooled candidate-to-source distance counts for one p value.
std::map<NodeId, std::uint64_t> distance_histogram(const SweepResult& result, double p, int t);

struct TreeRunRecord {
    TreeKind kind;
    double p = 0.0;
    int t = 0;
    std::uint64_t seed = 0;
    bool budget_abort = false;
    TreeRunResult result;
};

struct TreeSweepRow {
    double p = 0.0;
    int t = 0;
    int runs = 0;
    int successes = 0;          // estimate == root
    int wrong = 0;              // estimate at positive depth
    int died_out = 0;           // frontier empty
    int singleton_failures = 0; // survived with frontier of size 1
    int budget_aborts = 0;
    std::map<std::uint32_t, std::uint64_t> depth_counts; // candidate depth histogram
};

struct TreeSweepResult {
    std::vector<TreeSweepRow> rows;
    std::vector<TreeRunRecord> records;
};

TreeSweepResult tree_sweep(const TreeKind& kind, const std::vector<double>& p_grid, int t,
                           int runs, std::uint64_t master_seed,
                           std::uint64_t node_budget = kDefaultNodeBudget, int threads = 0);

// CSV with columns exactly: p, successes, wrong, empty, avg_distance, max_distance.
std::string rows_to_csv(const std::vector<SummaryRow>& rows);

// Per-run JSON log (one object per run, both distance aggregations in rows).
std::string sweep_to_json(const ExperimentSpec& spec, const SweepResult& result);

// Per-run batch CSV: kind, d_or_lambda, p, t, seed, status, frontier_size,
// heuristic_depth, success.
std::string tree_runs_to_csv(const TreeSweepResult& result);
std::string tree_rows_to_csv(const TreeSweepResult& result);

} // namespace rumor
