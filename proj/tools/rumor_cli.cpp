// Command-line front end. Everything goes through the C API in rumor.h so the
// binary exercises the same surface as external consumers.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rumor.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;

struct CommonOpts {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "64-bit seed (mandatory for stochastic commands)");
    cmd->add_option("--out", opts.out, "output file (default: stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

// Error reporting honors --format json with a machine-readable object on
// stderr; the exit code distinguishes usage (1) from resource limits (2).
int report_error(int code, const CommonOpts& opts, const std::string& fallback = "") {
    std::string message = rumor_last_error();
    if (message.empty()) message = fallback;
    const char* kind = code == RUMOR_E_RESOURCE ? "resource"
                       : code == RUMOR_E_IO ? "io"
                       : code == RUMOR_E_INFEASIBLE ? "infeasible"
                                                    : "usage";
    if (opts.format == "json") {
        nlohmann::json err{{"error", kind}, {"message", message}};
        std::cerr << err.dump() << '\n';
    } else {
        std::cerr << "error (" << kind << "): " << message << '\n';
    }
    return code == RUMOR_E_RESOURCE ? kExitResource : kExitUsage;
}

int usage_error(const CommonOpts& opts, const std::string& message) {
    if (opts.format == "json") {
        nlohmann::json err{{"error", "usage"}, {"message", message}};
        std::cerr << err.dump() << '\n';
    } else {
        std::cerr << "error (usage): " << message << '\n';
    }
    return kExitUsage;
}

int emit(const CommonOpts& opts, const std::string& payload) {
    if (opts.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return kExitOk;
    }
    std::ofstream out(opts.out);
    if (!out) {
        std::cerr << "error (io): cannot write " << opts.out << '\n';
        return kExitUsage;
    }
    out << payload;
    return kExitOk;
}

std::string take_string(char* owned) {
    std::string s = owned ? owned : "";
    rumor_string_free(owned);
    return s;
}

// Whitespace-separated node ids, as produced by tools like `cut` or by hand.
std::vector<std::uint32_t> read_id_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open id list: " + path);
    std::vector<std::uint32_t> ids;
    std::uint64_t v = 0;
    while (in >> v) ids.push_back(static_cast<std::uint32_t>(v));
    return ids;
}

struct GraphHandle {
    rumor_graph* g = nullptr;
    ~GraphHandle() { rumor_graph_free(g); }
};

int load_graph(const std::string& path, const CommonOpts& opts, GraphHandle& gh) {
    const int rc = rumor_graph_read(path.c_str(), &gh.g);
    if (rc != RUMOR_OK) return report_error(rc, opts);
    return kExitOk;
}

struct GenOpts {
    std::string kind = "erdos_renyi";
    std::uint32_t n = 0;
    double avg_degree = 0.0;
    std::uint32_t d = 0;
    double expected_degree = 0.0;
};

int make_graph(const GenOpts& gen, std::uint64_t seed, const CommonOpts& opts, GraphHandle& gh) {
    int rc = RUMOR_E_PARAM;
    if (gen.kind == "erdos_renyi")
        rc = rumor_graph_erdos_renyi(gen.n, gen.avg_degree, seed, &gh.g);
    else if (gen.kind == "config_regular")
        rc = rumor_graph_config_regular(gen.n, gen.d, seed, &gh.g);
    else if (gen.kind == "geometric")
        rc = rumor_graph_geometric(gen.n, gen.expected_degree, seed, &gh.g);
    if (rc != RUMOR_OK) return report_error(rc, opts, "unknown generator kind: " + gen.kind);
    return kExitOk;
}

void add_gen_options(CLI::App* cmd, GenOpts& gen) {
    cmd->add_option("--kind", gen.kind, "generator: erdos_renyi, config_regular, geometric")
        ->check(CLI::IsMember({"erdos_renyi", "config_regular", "geometric"}));
    cmd->add_option("--n", gen.n, "number of nodes")->required();
    cmd->add_option("--avg-degree", gen.avg_degree, "expected degree (erdos_renyi)");
    cmd->add_option("--d", gen.d, "degree (config_regular)");
    cmd->add_option("--expected-degree", gen.expected_degree, "expected degree (geometric)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent-cascade rumor source detection toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file; explicit flags win");
    app.allow_config_extras(CLI::config_extras_mode::error);

    // generate -----------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "generate a graph and write its edge list");
    GenOpts gen_opts;
    CommonOpts gen_common;
    add_gen_options(generate, gen_opts);
    add_common(generate, gen_common);

    // cascade ------------------------------------------------------------
    auto* cascade = app.add_subcommand("cascade", "run one cascade and print the snapshot");
    CommonOpts cas_common;
    std::string cas_graph;
    std::uint32_t cas_source = 0;
    double cas_p = 0.5;
    int cas_rounds = 1;
    cascade->add_option("--graph", cas_graph, "edge-list file")->required();
    cascade->add_option("--source", cas_source, "source node id")->required();
    cascade->add_option("--p", cas_p, "activation probability")->required();
    cascade->add_option("--rounds", cas_rounds, "observation round t")->required();
    add_common(cascade, cas_common);

    // infer --------------------------------------------------------------
    auto* infer = app.add_subcommand("infer", "ball-intersection source candidates");
    CommonOpts inf_common;
    std::string inf_graph, inf_active;
    std::uint32_t inf_cap = UINT32_MAX;
    std::optional<std::uint32_t> inf_source;
    infer->add_option("--graph", inf_graph, "edge-list file")->required();
    infer->add_option("--active", inf_active, "id-list file with the active set")->required();
    infer->add_option("--depth-cap", inf_cap, "BFS truncation depth");
    infer->add_option("--source", inf_source, "true source; adds run classification");
    add_common(infer, inf_common);

    // likelihood ---------------------------------------------------------
    auto* likelihood =
        app.add_subcommand("likelihood", "per-node likelihood and posterior of an observation");
    CommonOpts lik_common;
    std::string lik_graph, lik_x;
    double lik_p = 0.5;
    int lik_t = 1;
    std::uint64_t lik_mc_runs = 0;
    likelihood->add_option("--graph", lik_graph, "edge-list file")->required();
    likelihood->add_option("--x", lik_x, "id-list file with the observed frontier")->required();
    likelihood->add_option("--p", lik_p, "activation probability")->required();
    likelihood->add_option("--t", lik_t, "observation round")->required();
    likelihood->add_option("--mc-runs", lik_mc_runs,
                           "Monte-Carlo runs per node (0 = exact enumeration)");
    add_common(likelihood, lik_common);

    // analyze ------------------------------------------------------------
    auto* analyze = app.add_subcommand("analyze", "extinction series and fixed point");
    CommonOpts ana_common;
    std::string ana_kind = "binomial";
    std::uint32_t ana_d = 4;
    double ana_p = 0.5;
    double ana_mu = 1.0;
    std::size_t ana_steps = 50;
    analyze->add_option("--kind", ana_kind, "offspring model")
        ->check(CLI::IsMember({"binomial", "poisson"}));
    analyze->add_option("--d", ana_d, "degree (binomial)");
    analyze->add_option("--p", ana_p, "activation probability (binomial)");
    analyze->add_option("--mu", ana_mu, "offspring mean (poisson)");
    analyze->add_option("--steps", ana_steps, "number of rounds T");
    add_common(analyze, ana_common);

    // experiment ---------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "cascade+inference sweep over a p grid");
    CommonOpts exp_common;
    GenOpts exp_gen;
    std::vector<double> exp_p_grid;
    std::vector<int> exp_rounds;
    int exp_runs = 100;
    bool exp_fixed_graph = false;
    int exp_threads = 0;
    std::string exp_runlog;
    add_gen_options(experiment, exp_gen);
    experiment->add_option("--p-grid", exp_p_grid, "activation probabilities")->required();
    experiment->add_option("--rounds", exp_rounds, "observation rounds")->required();
    experiment->add_option("--runs", exp_runs, "runs per (p, t) cell");
    experiment->add_flag("--fixed-graph", exp_fixed_graph, "reuse one graph across runs");
    experiment->add_option("--threads", exp_threads, "worker threads (0 = all cores)");
    experiment->add_option("--runlog", exp_runlog, "also write the per-run JSON log here");
    add_common(experiment, exp_common);

    // replicate ----------------------------------------------------------
    auto* replicate = app.add_subcommand("replicate", "rerun a built-in published-table preset");
    CommonOpts rep_common;
    std::string rep_preset;
    std::string rep_out_dir = ".";
    int rep_threads = 0;
    replicate->add_option("--preset", rep_preset, "table1, table2, table3, fig3 or fig4")
        ->required();
    replicate->add_option("--out-dir", rep_out_dir, "output directory");
    replicate->add_option("--threads", rep_threads, "worker threads (0 = all cores)");
    add_common(replicate, rep_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    // generate
    if (generate->parsed()) {
        if (!gen_common.seed) return usage_error(gen_common, "generate requires --seed");
        GraphHandle gh;
        if (int rc = make_graph(gen_opts, *gen_common.seed, gen_common, gh)) return rc;
        if (gen_common.out.empty())
            return usage_error(gen_common, "generate requires --out (edge-list path)");
        if (int rc = rumor_graph_write(gh.g, gen_common.out.c_str()))
            return report_error(rc, gen_common);
        std::cerr << "wrote " << rumor_graph_node_count(gh.g) << " nodes, "
                  << rumor_graph_edge_count(gh.g) << " edges to " << gen_common.out << '\n';
        return kExitOk;
    }

    // cascade
    if (cascade->parsed()) {
        if (!cas_common.seed) return usage_error(cas_common, "cascade requires --seed");
        GraphHandle gh;
        if (int rc = load_graph(cas_graph, cas_common, gh)) return rc;
        rumor_snapshot* snap = nullptr;
        if (int rc = rumor_cascade_run(gh.g, cas_source, cas_p, cas_rounds, *cas_common.seed,
                                       &snap))
            return report_error(rc, cas_common);
        char* json = nullptr;
        rumor_snapshot_json(snap, &json);
        const std::string payload = take_string(json);
        rumor_snapshot_free(snap);
        return emit(cas_common, payload);
    }

    // infer (deterministic; --seed accepted but unused)
    if (infer->parsed()) {
        GraphHandle gh;
        if (int rc = load_graph(inf_graph, inf_common, gh)) return rc;
        std::vector<std::uint32_t> active;
        try {
            active = read_id_list(inf_active);
        } catch (const std::exception& e) {
            return usage_error(inf_common, e.what());
        }
        rumor_candidates* cand = nullptr;
        if (int rc = rumor_candidate_set(gh.g, active.data(), active.size(), inf_cap, &cand))
            return report_error(rc, inf_common);
        char* json = nullptr;
        rumor_candidates_json(cand, &json);
        std::string payload = take_string(json);
        if (inf_source) {
            int cls = RUMOR_RUN_EMPTY;
            double avg = 0.0;
            std::uint32_t maxd = 0;
            if (int rc = rumor_evaluate_run(gh.g, *inf_source, cand, &cls, &avg, &maxd)) {
                rumor_candidates_free(cand);
                return report_error(rc, inf_common);
            }
            nlohmann::json obj = nlohmann::json::parse(payload);
            obj["classification"] = cls == RUMOR_RUN_SUCCESS ? "success"
                                    : cls == RUMOR_RUN_WRONG ? "wrong"
                                                             : "empty";
            if (cls != RUMOR_RUN_EMPTY) {
                obj["avg_distance"] = avg;
                obj["max_distance"] = maxd;
            }
            payload = obj.dump();
        }
        rumor_candidates_free(cand);
        return emit(inf_common, payload);
    }

    // likelihood
    if (likelihood->parsed()) {
        if (lik_mc_runs > 0 && !lik_common.seed)
            return usage_error(lik_common, "likelihood with --mc-runs requires --seed");
        GraphHandle gh;
        if (int rc = load_graph(lik_graph, lik_common, gh)) return rc;
        std::vector<std::uint32_t> x;
        try {
            x = read_id_list(lik_x);
        } catch (const std::exception& e) {
            return usage_error(lik_common, e.what());
        }
        const std::uint32_t n = rumor_graph_node_count(gh.g);
        std::vector<double> like(n, 0.0);
        for (std::uint32_t v = 0; v < n; ++v) {
            int rc;
            if (lik_mc_runs > 0) {
                double se = 0.0;
                rc = rumor_mc_likelihood(gh.g, x.data(), x.size(), v, lik_p, lik_t, lik_mc_runs,
                                         *lik_common.seed + v, &like[v], &se);
            } else {
                rc = rumor_exact_likelihood(gh.g, x.data(), x.size(), v, lik_p, lik_t, &like[v]);
            }
            if (rc != RUMOR_OK) return report_error(rc, lik_common);
        }
        std::vector<double> post(n, 0.0);
        if (int rc = rumor_posterior(like.data(), n, post.data()))
            return report_error(rc, lik_common);

        std::vector<std::uint32_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return post[a] > post[b]; });
        if (lik_common.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (std::uint32_t v : order)
                rows.push_back({{"node", v}, {"likelihood", like[v]}, {"posterior", post[v]}});
            return emit(lik_common, nlohmann::json{{"rows", rows}}.dump());
        }
        std::ostringstream os;
        os << "node,likelihood,posterior\n";
        for (std::uint32_t v : order) os << v << ',' << like[v] << ',' << post[v] << '\n';
        return emit(lik_common, os.str());
    }

    // analyze (deterministic)
    if (analyze->parsed()) {
        std::vector<double> values(ana_steps + 1, 0.0);
        double fp = 0.0;
        const int rc = ana_kind == "binomial"
                           ? rumor_extinction_binomial(ana_d, ana_p, ana_steps, values.data(), &fp)
                           : rumor_extinction_poisson(ana_mu, ana_steps, values.data(), &fp);
        if (rc != RUMOR_OK) return report_error(rc, ana_common);
        if (ana_common.format == "json") {
            nlohmann::json obj{{"kind", ana_kind}, {"fixed_point", fp}, {"values", values}};
            if (ana_kind == "binomial") {
                obj["d"] = ana_d;
                obj["p"] = ana_p;
            } else {
                obj["mu"] = ana_mu;
            }
            return emit(ana_common, obj.dump());
        }
        std::ostringstream os;
        os << "t,x_t\n";
        os.precision(15);
        for (std::size_t t = 0; t < values.size(); ++t) os << t << ',' << values[t] << '\n';
        os << "# fixed_point " << fp << '\n';
        return emit(ana_common, os.str());
    }

    // experiment
    if (experiment->parsed()) {
        if (!exp_common.seed) return usage_error(exp_common, "experiment requires --seed");
        nlohmann::json spec{{"generator", {{"kind", exp_gen.kind}, {"n", exp_gen.n}}},
                            {"p_grid", exp_p_grid},
                            {"rounds", exp_rounds},
                            {"runs_per_cell", exp_runs},
                            {"master_seed", *exp_common.seed},
                            {"fixed_graph", exp_fixed_graph},
                            {"threads", exp_threads}};
        if (exp_gen.kind == "erdos_renyi")
            spec["generator"]["avg_degree"] = exp_gen.avg_degree;
        else if (exp_gen.kind == "config_regular")
            spec["generator"]["d"] = exp_gen.d;
        else
            spec["generator"]["expected_degree"] = exp_gen.expected_degree;

        char* csv = nullptr;
        char* runlog = nullptr;
        const int rc = rumor_experiment_run(spec.dump().c_str(), &csv,
                                            exp_runlog.empty() ? nullptr : &runlog);
        if (rc != RUMOR_OK) return report_error(rc, exp_common);
        if (!exp_runlog.empty()) {
            std::ofstream log(exp_runlog);
            if (!log) {
                rumor_string_free(csv);
                rumor_string_free(runlog);
                return usage_error(exp_common, "cannot write " + exp_runlog);
            }
            log << take_string(runlog);
        }
        return emit(exp_common, take_string(csv));
    }

    // replicate
    if (replicate->parsed()) {
        if (!rep_common.seed) return usage_error(rep_common, "replicate requires --seed");
        std::string out_dir = rep_out_dir;
        if (const char* env = std::getenv("RUMOR_OUT_DIR")) out_dir = env;
        if (int rc = rumor_replicate(rep_preset.c_str(), *rep_common.seed, out_dir.c_str(),
                                     rep_threads))
            return report_error(rc, rep_common);
        std::cerr << "wrote " << rep_preset << " outputs to " << out_dir << '\n';
        return kExitOk;
    }

    return kExitUsage;
}
