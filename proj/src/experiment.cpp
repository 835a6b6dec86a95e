#include "rumor/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <sstream>
#include <thread>

#include "rumor/cascade.hpp"
#include "rumor/errors.hpp"

namespace rumor {
namespace {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs job(i) for i in [0, count) on a worker pool; results land in
// caller-owned slots indexed by i, so scheduling never affects output.
template <class Job>
void parallel_for(std::size_t count, int threads, Job&& job) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                job(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::string format_avg(double value, bool present) {
    if (!present) return "-";
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << value;
    return os.str();
}

} // namespace

SweepResult run_sweep(const ExperimentSpec& spec) {
    if (spec.runs_per_cell < 1) throw param_error("run_sweep: runs_per_cell must be >= 1");
    if (spec.p_grid.empty() || spec.rounds.empty())
        throw param_error("run_sweep: p_grid and rounds must be nonempty");
    for (double p : spec.p_grid)
        if (p < 0.0 || p > 1.0) throw param_error("run_sweep: p values must be in [0,1]");

    const int threads = resolve_threads(spec.threads);
    const std::size_t cells = spec.p_grid.size() * spec.rounds.size();
    const std::size_t total_runs = cells * static_cast<std::size_t>(spec.runs_per_cell);

    Graph shared_graph;
    if (spec.fixed_graph) {
        GeneratorSpec gs = spec.gen;
        gs.seed = stream_seed(spec.master_seed, 0x6f78, 0);
        shared_graph = generate(gs);
    }

    SweepResult result;
    result.records.resize(total_runs);

    parallel_for(total_runs, threads, [&](std::size_t idx) {
        const std::size_t cell = idx / spec.runs_per_cell;
        const int run = static_cast<int>(idx % spec.runs_per_cell);
        const std::size_t pi = cell / spec.rounds.size();
        const std::size_t ti = cell % spec.rounds.size();
        const double p = spec.p_grid[pi];
        const int t = spec.rounds[ti];

        const std::uint64_t run_seed = stream_seed(spec.master_seed, cell, run);
        Rng rng(run_seed);

        const Graph* graph = &shared_graph;
        Graph own;
        if (!spec.fixed_graph) {
            GeneratorSpec gs = spec.gen;
            std::uint64_t s = run_seed;
            gs.seed = splitmix64(s);
            own = generate(gs);
            graph = &own;
        }

        const NodeId source =
            std::uniform_int_distribution<NodeId>(0, graph->node_count() - 1)(rng);
        const CascadeSnapshot snap = simulate(*graph, source, CascadeParams{p, t}, rng);
        const CandidateResult cand =
            candidate_set(*graph, snap.active(), static_cast<NodeId>(t));
        const RunOutcome outcome = evaluate_run(*graph, snap, cand);

        RunRecord rec;
        rec.p = p;
        rec.t = t;
        rec.run = run;
        rec.classification = outcome.classification;
        rec.source = source;
        rec.t_prime = cand.t_prime;
        rec.active_size = snap.active().size();
        rec.candidate_distances = outcome.candidate_distances;
        result.records[idx] = std::move(rec);
    });

    // Deterministic ordered reduction over the run records.
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const std::size_t pi = cell / spec.rounds.size();
        const std::size_t ti = cell % spec.rounds.size();
        SummaryRow row;
        row.p = spec.p_grid[pi];
        row.t = spec.rounds[ti];
        std::uint64_t pooled_sum = 0, pooled_count = 0;
        double per_run_sum = 0.0;
        std::uint64_t nonempty_runs = 0;
        for (int run = 0; run < spec.runs_per_cell; ++run) {
            const RunRecord& rec = result.records[cell * spec.runs_per_cell + run];
            switch (rec.classification) {
                case RunClassification::Success: ++row.successes; break;
                case RunClassification::Wrong: ++row.wrong; break;
                case RunClassification::Empty: ++row.empty; break;
            }
            if (rec.active_size == 1) ++row.singleton_runs;
            if (rec.classification != RunClassification::Empty) {
                ++nonempty_runs;
                std::uint64_t run_sum = 0;
                for (NodeId d : rec.candidate_distances) {
                    pooled_sum += d;
                    ++pooled_count;
                    run_sum += d;
                    row.max_distance = std::max(row.max_distance, d);
                }
                per_run_sum += rec.candidate_distances.empty()
                                   ? 0.0
                                   : static_cast<double>(run_sum) / rec.candidate_distances.size();
            }
        }
        row.has_distances = pooled_count > 0;
        if (row.has_distances) {
            row.avg_distance_pooled = static_cast<double>(pooled_sum) / pooled_count;
            row.avg_distance_per_run = per_run_sum / static_cast<double>(nonempty_runs);
        }
        result.rows.push_back(row);
    }
    return result;
}

std::map<NodeId, std::uint64_t> distance_histogram(const SweepResult& result, double p, int t) {
    std::map<NodeId, std::uint64_t> hist;
    for (const RunRecord& rec : result.records) {
        if (rec.p != p || rec.t != t) continue;
        for (NodeId d : rec.candidate_distances) ++hist[d];
    }
    return hist;
}

TreeSweepResult tree_sweep(const TreeKind& kind, const std::vector<double>& p_grid, int t,
                           int runs, std::uint64_t master_seed, std::uint64_t node_budget,
                           int threads) {
    if (runs < 1) throw param_error("tree_sweep: runs must be >= 1");
    if (p_grid.empty()) throw param_error("tree_sweep: p_grid must be nonempty");

    TreeSweepResult result;
    result.records.resize(p_grid.size() * static_cast<std::size_t>(runs));

    parallel_for(result.records.size(), resolve_threads(threads), [&](std::size_t idx) {
        const std::size_t pi = idx / runs;
        const int run = static_cast<int>(idx % runs);
        TreeRunRecord rec;
        rec.kind = kind;
        rec.p = p_grid[pi];
        rec.t = t;
        rec.seed = stream_seed(master_seed, pi, run);
        Rng rng(rec.seed);
        try {
            const ActivationTree tree = simulate_tree(kind, rec.p, t, rng, node_budget);
            rec.result = closest_candidate(tree);
        } catch (const resource_error&) {
            rec.budget_abort = true;
        }
        result.records[idx] = std::move(rec);
    });

    for (std::size_t pi = 0; pi < p_grid.size(); ++pi) {
        TreeSweepRow row;
        row.p = p_grid[pi];
        row.t = t;
        row.runs = runs;
        for (int run = 0; run < runs; ++run) {
            const TreeRunRecord& rec = result.records[pi * runs + run];
            if (rec.budget_abort) {
                ++row.budget_aborts;
                continue;
            }
            if (rec.result.status == TreeStatus::DiedOut) {
                ++row.died_out;
            } else if (rec.result.heuristic == TreeHeuristic::Failure) {
                ++row.singleton_failures;
            } else if (rec.result.success) {
                ++row.successes;
                ++row.depth_counts[0];
            } else {
                ++row.wrong;
                ++row.depth_counts[rec.result.candidate_depth];
            }
        }
        result.rows.push_back(row);
    }
    return result;
}

std::string rows_to_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    os << "p,successes,wrong,empty,avg_distance,max_distance\n";
    for (const SummaryRow& row : rows) {
        std::ostringstream pv;
        pv.setf(std::ios::fixed);
        pv.precision(2);
        pv << row.p;
        os << pv.str() << ',' << row.successes << ',' << row.wrong << ',' << row.empty << ','
           << format_avg(row.avg_distance_pooled, row.has_distances) << ','
           << (row.has_distances ? std::to_string(row.max_distance) : std::string("-")) << '\n';
    }
    return os.str();
}

std::string sweep_to_json(const ExperimentSpec& spec, const SweepResult& result) {
    std::ostringstream os;
    os << "{\"master_seed\":" << spec.master_seed << ",\"runs_per_cell\":" << spec.runs_per_cell
       << ",\"fixed_graph\":" << (spec.fixed_graph ? "true" : "false") << ",\"rows\":[";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const SummaryRow& row = result.rows[i];
        if (i) os << ',';
        os << "{\"p\":" << row.p << ",\"t\":" << row.t << ",\"successes\":" << row.successes
           << ",\"wrong\":" << row.wrong << ",\"empty\":" << row.empty
           << ",\"singleton_runs\":" << row.singleton_runs;
        if (row.has_distances) {
            os << ",\"avg_distance_pooled\":" << row.avg_distance_pooled
               << ",\"avg_distance_per_run\":" << row.avg_distance_per_run
               << ",\"max_distance\":" << row.max_distance;
        }
        os << '}';
    }
    os << "],\"runs\":[";
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const RunRecord& rec = result.records[i];
        if (i) os << ',';
        const char* cls = rec.classification == RunClassification::Success ? "success"
                          : rec.classification == RunClassification::Wrong ? "wrong"
                                                                           : "empty";
        os << "{\"p\":" << rec.p << ",\"t\":" << rec.t << ",\"run\":" << rec.run
           << ",\"classification\":\"" << cls << "\",\"source\":" << rec.source
           << ",\"t_prime\":" << rec.t_prime << ",\"active_size\":" << rec.active_size
           << ",\"candidate_distances\":[";
        for (std::size_t j = 0; j < rec.candidate_distances.size(); ++j) {
            if (j) os << ',';
            os << rec.candidate_distances[j];
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

namespace {

std::string kind_name(const TreeKind& kind) {
    return kind.variant == TreeKind::Variant::DRegular ? "dregular" : "gw_poisson";
}

double kind_param(const TreeKind& kind) {
    return kind.variant == TreeKind::Variant::DRegular ? static_cast<double>(kind.d) : kind.lambda;
}

} // namespace

std::string tree_runs_to_csv(const TreeSweepResult& result) {
    std::ostringstream os;
    os << "kind,d_or_lambda,p,t,seed,status,frontier_size,heuristic_depth,success\n";
    for (const TreeRunRecord& rec : result.records) {
        os << kind_name(rec.kind) << ',' << kind_param(rec.kind) << ',' << rec.p << ',' << rec.t
           << ',' << rec.seed << ',';
        if (rec.budget_abort) {
            os << "budget_abort,-,-,-\n";
            continue;
        }
        os << (rec.result.status == TreeStatus::Survived ? "survived" : "died_out") << ','
           << rec.result.frontier_size << ',';
        if (rec.result.heuristic == TreeHeuristic::Candidate)
            os << rec.result.candidate_depth;
        else
            os << "failure";
        os << ',' << (rec.result.success ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string tree_rows_to_csv(const TreeSweepResult& result) {
    std::ostringstream os;
    os << "p,t,runs,successes,wrong,died_out,singleton_failures,budget_aborts\n";
    for (const TreeSweepRow& row : result.rows) {
        os << row.p << ',' << row.t << ',' << row.runs << ',' << row.successes << ',' << row.wrong
           << ',' << row.died_out << ',' << row.singleton_failures << ',' << row.budget_aborts
           << '\n';
    }
    return os.str();
}

} // namespace rumor
