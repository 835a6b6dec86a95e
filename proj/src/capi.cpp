#include "rumor.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "rumor/analytics.hpp"
#include "rumor/cascade.hpp"
#include "rumor/errors.hpp"
#include "rumor/experiment.hpp"
#include "rumor/graph.hpp"
#include "rumor/inference.hpp"
#include "rumor/likelihood.hpp"
#include "rumor/replicate.hpp"
#include "rumor/tree_sim.hpp"

using nlohmann::json;

struct rumor_graph {
    rumor::Graph graph;
};
struct rumor_snapshot {
    rumor::CascadeSnapshot snap;
};
struct rumor_candidates {
    rumor::CandidateResult result;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Translates C++ exceptions from the core into error codes.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return RUMOR_OK;
    } catch (const rumor::param_error& e) {
        g_last_error = e.what();
        return RUMOR_E_PARAM;
    } catch (const rumor::resource_error& e) {
        g_last_error = e.what();
        return RUMOR_E_RESOURCE;
    } catch (const rumor::io_error& e) {
        g_last_error = e.what();
        return RUMOR_E_IO;
    } catch (const rumor::infeasible_error& e) {
        g_last_error = e.what();
        return RUMOR_E_INFEASIBLE;
    } catch (const json::exception& e) {
        g_last_error = e.what();
        return RUMOR_E_PARAM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RUMOR_E_PARAM;
    }
}

rumor::ExperimentSpec parse_experiment_spec(const char* spec_json) {
    const json j = json::parse(spec_json);
    rumor::ExperimentSpec spec;
    const json& gen = j.at("generator");
    const std::string kind = gen.at("kind").get<std::string>();
    spec.gen.n = gen.at("n").get<std::uint32_t>();
    if (kind == "erdos_renyi") {
        spec.gen.kind = rumor::GeneratorSpec::Kind::ErdosRenyi;
        spec.gen.avg_degree = gen.at("avg_degree").get<double>();
    } else if (kind == "config_regular") {
        spec.gen.kind = rumor::GeneratorSpec::Kind::ConfigRegular;
        spec.gen.d = gen.at("d").get<std::uint32_t>();
    } else if (kind == "geometric") {
        spec.gen.kind = rumor::GeneratorSpec::Kind::Geometric;
        spec.gen.expected_degree = gen.at("expected_degree").get<double>();
    } else {
        throw rumor::param_error("unknown generator kind: " + kind);
    }
    spec.p_grid = j.at("p_grid").get<std::vector<double>>();
    spec.rounds = j.at("rounds").get<std::vector<int>>();
    spec.runs_per_cell = j.at("runs_per_cell").get<int>();
    spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    spec.fixed_graph = j.value("fixed_graph", false);
    spec.threads = j.value("threads", 0);
    return spec;
}

} // namespace

extern "C" {

const char* rumor_last_error(void) { return g_last_error.c_str(); }

void rumor_string_free(char* str) { std::free(str); }

int rumor_graph_erdos_renyi(uint32_t n, double avg_degree, uint64_t seed, rumor_graph** out) {
    if (!out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = new rumor_graph{rumor::gen_erdos_renyi(n, avg_degree, seed)}; });
}

int rumor_graph_config_regular(uint32_t n, uint32_t d, uint64_t seed, rumor_graph** out) {
    if (!out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = new rumor_graph{rumor::gen_config_regular(n, d, seed)}; });
}

int rumor_graph_geometric(uint32_t n, double expected_degree, uint64_t seed, rumor_graph** out) {
    if (!out) return RUMOR_E_NULLPTR;
    return guarded(
        [&] { *out = new rumor_graph{rumor::gen_geometric(n, expected_degree, seed)}; });
}

int rumor_graph_read(const char* path, rumor_graph** out) {
    if (!path || !out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = new rumor_graph{rumor::read_edge_list(path)}; });
}

int rumor_graph_write(const rumor_graph* g, const char* path) {
    if (!g || !path) return RUMOR_E_NULLPTR;
    return guarded([&] { rumor::write_edge_list(g->graph, path); });
}

uint32_t rumor_graph_node_count(const rumor_graph* g) { return g ? g->graph.node_count() : 0; }

uint64_t rumor_graph_edge_count(const rumor_graph* g) { return g ? g->graph.edge_count() : 0; }

uint32_t rumor_graph_degree(const rumor_graph* g, uint32_t v) {
    return g && g->graph.is_valid_node(v) ? g->graph.degree(v) : 0;
}

void rumor_graph_free(rumor_graph* g) { delete g; }

int rumor_bfs_distances(const rumor_graph* g, const uint32_t* sources, size_t n_sources,
                        uint32_t depth_cap, uint32_t* distances) {
    if (!g || !sources || !distances) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const auto dm = rumor::bfs_distances(
            g->graph, std::vector<rumor::NodeId>(sources, sources + n_sources), depth_cap);
        std::memcpy(distances, dm.distance.data(), dm.distance.size() * sizeof(uint32_t));
    });
}

int rumor_cascade_run(const rumor_graph* g, uint32_t source, double p, int rounds, uint64_t seed,
                      rumor_snapshot** out) {
    if (!g || !out) return RUMOR_E_NULLPTR;
    return guarded([&] {
        rumor::Rng rng(seed);
        *out = new rumor_snapshot{
            rumor::simulate(g->graph, source, rumor::CascadeParams{p, rounds}, rng)};
    });
}

uint32_t rumor_snapshot_source(const rumor_snapshot* s) { return s ? s->snap.source : 0; }

int rumor_snapshot_rounds(const rumor_snapshot* s) {
    return s ? static_cast<int>(s->snap.history.size()) - 1 : 0;
}

size_t rumor_snapshot_active_count(const rumor_snapshot* s) {
    return s ? s->snap.active().size() : 0;
}

void rumor_snapshot_active(const rumor_snapshot* s, uint32_t* buf) {
    if (!s || !buf) return;
    const auto& active = s->snap.active();
    std::memcpy(buf, active.data(), active.size() * sizeof(uint32_t));
}

int rumor_snapshot_json(const rumor_snapshot* s, char** out) {
    if (!s || !out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = dup_string(s->snap.to_json()); });
}

void rumor_snapshot_free(rumor_snapshot* s) { delete s; }

int rumor_candidate_set(const rumor_graph* g, const uint32_t* active, size_t n_active,
                        uint32_t depth_cap, rumor_candidates** out) {
    if (!g || !out || (!active && n_active > 0)) return RUMOR_E_NULLPTR;
    return guarded([&] {
        *out = new rumor_candidates{rumor::candidate_set(
            g->graph, std::vector<rumor::NodeId>(active, active + n_active), depth_cap)};
    });
}

int rumor_candidates_status(const rumor_candidates* c) {
    return c && c->result.status == rumor::CandidateResult::Status::Ok
               ? RUMOR_CANDIDATES_OK
               : RUMOR_CANDIDATES_EMPTY_ACTIVE_SET;
}

uint32_t rumor_candidates_t_prime(const rumor_candidates* c) { return c ? c->result.t_prime : 0; }

size_t rumor_candidates_count(const rumor_candidates* c) {
    return c ? c->result.candidates.size() : 0;
}

void rumor_candidates_nodes(const rumor_candidates* c, uint32_t* buf) {
    if (!c || !buf) return;
    std::memcpy(buf, c->result.candidates.data(),
                c->result.candidates.size() * sizeof(uint32_t));
}

int rumor_candidates_json(const rumor_candidates* c, char** out) {
    if (!c || !out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = dup_string(rumor::to_json(c->result)); });
}

void rumor_candidates_free(rumor_candidates* c) { delete c; }

int rumor_evaluate_run(const rumor_graph* g, uint32_t source, const rumor_candidates* c,
                       int* classification, double* avg_distance, uint32_t* max_distance) {
    if (!g || !c || !classification || !avg_distance || !max_distance) return RUMOR_E_NULLPTR;
    return guarded([&] {
        rumor::CascadeSnapshot snap;
        snap.source = source;
        snap.history = {{source}};
        const rumor::RunOutcome out = rumor::evaluate_run(g->graph, snap, c->result);
        *classification = out.classification == rumor::RunClassification::Success ? RUMOR_RUN_SUCCESS
                          : out.classification == rumor::RunClassification::Wrong ? RUMOR_RUN_WRONG
                                                                                  : RUMOR_RUN_EMPTY;
        *avg_distance = out.avg_candidate_distance;
        *max_distance = out.max_candidate_distance;
    });
}

int rumor_exact_likelihood(const rumor_graph* g, const uint32_t* x, size_t n_x, uint32_t v,
                           double p, int t, double* out) {
    if (!g || !out || (!x && n_x > 0)) return RUMOR_E_NULLPTR;
    return guarded([&] {
        *out = rumor::exact_likelihood(g->graph, std::vector<rumor::NodeId>(x, x + n_x), v, p, t);
    });
}

int rumor_mc_likelihood(const rumor_graph* g, const uint32_t* x, size_t n_x, uint32_t v, double p,
                        int t, uint64_t runs, uint64_t seed, double* estimate, double* std_error) {
    if (!g || !estimate || !std_error || (!x && n_x > 0)) return RUMOR_E_NULLPTR;
    return guarded([&] {
        rumor::Rng rng(seed);
        const auto est = rumor::mc_likelihood(
            g->graph, std::vector<rumor::NodeId>(x, x + n_x), v, p, t, runs, rng);
        *estimate = est.estimate;
        *std_error = est.std_error;
    });
}

int rumor_posterior(const double* likelihoods, size_t n, double* posterior_out) {
    if (!likelihoods || !posterior_out) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const auto post = rumor::posterior(std::vector<double>(likelihoods, likelihoods + n));
        std::memcpy(posterior_out, post.data(), post.size() * sizeof(double));
    });
}

int rumor_extinction_binomial(uint32_t d, double p, size_t T, double* values,
                              double* fixed_point) {
    if (!values || !fixed_point) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const auto series = rumor::extinction_series_binomial(d, p, T);
        std::memcpy(values, series.values.data(), series.values.size() * sizeof(double));
        *fixed_point = series.fixed_point;
    });
}

int rumor_extinction_poisson(double mu, size_t T, double* values, double* fixed_point) {
    if (!values || !fixed_point) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const auto series = rumor::extinction_series_poisson(mu, T);
        std::memcpy(values, series.values.data(), series.values.size() * sizeof(double));
        *fixed_point = series.fixed_point;
    });
}

int rumor_yv_probability(int offspring_kind, double d_or_lambda, double p, uint32_t k,
                         uint32_t t_star, int role, double* out) {
    if (!out) return RUMOR_E_NULLPTR;
    return guarded([&] {
        rumor::YvSpec spec;
        spec.p = p;
        spec.k = k;
        spec.t_star = t_star;
        spec.role = role == RUMOR_ROLE_OTHER_CANDIDATE ? rumor::CandidateRole::OtherCandidate
                                                       : rumor::CandidateRole::ClosestCandidate;
        rumor::ExtinctionSeries series;
        if (offspring_kind == RUMOR_OFFSPRING_BINOMIAL) {
            spec.d = static_cast<std::uint32_t>(d_or_lambda);
            series = rumor::extinction_series_binomial(spec.d, p, t_star);
        } else {
            spec.lambda = d_or_lambda;
            series = rumor::extinction_series_poisson(d_or_lambda * p, t_star);
        }
        *out = rumor::yv_distribution(spec, series);
    });
}

int rumor_bessel_i0(double x, double* out, int* is_log) {
    if (!out || !is_log) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const auto res = rumor::bessel_i0(x);
        *out = res.value;
        *is_log = res.is_log ? 1 : 0;
    });
}

int rumor_prob_all_children_activated(double lambda, double p, double* out) {
    if (!out) return RUMOR_E_NULLPTR;
    return guarded([&] { *out = rumor::prob_all_children_activated(lambda, p); });
}

int rumor_tree_run(int tree_kind, double d_or_lambda, double p, int t, uint64_t seed,
                   uint64_t node_budget, int* status, uint32_t* frontier_size,
                   uint32_t* heuristic_depth, int* success) {
    if (!status || !frontier_size || !heuristic_depth || !success) return RUMOR_E_NULLPTR;
    return guarded([&] {
        rumor::TreeKind kind;
        if (tree_kind == RUMOR_TREE_DREGULAR) {
            kind.variant = rumor::TreeKind::Variant::DRegular;
            kind.d = static_cast<std::uint32_t>(d_or_lambda);
        } else {
            kind.variant = rumor::TreeKind::Variant::GWPoisson;
            kind.lambda = d_or_lambda;
        }
        rumor::Rng rng(seed);
        const std::uint64_t budget = node_budget == 0 ? rumor::kDefaultNodeBudget : node_budget;
        const auto tree = rumor::simulate_tree(kind, p, t, rng, budget);
        const auto res = rumor::closest_candidate(tree);
        *status = res.status == rumor::TreeStatus::Survived ? RUMOR_TREE_SURVIVED
                                                            : RUMOR_TREE_DIED_OUT;
        *frontier_size = res.frontier_size;
        *heuristic_depth =
            res.heuristic == rumor::TreeHeuristic::Candidate ? res.candidate_depth : UINT32_MAX;
        *success = res.success ? 1 : 0;
    });
}

int rumor_experiment_run(const char* spec_json, char** csv_out, char** runlog_json_out) {
    if (!spec_json || !csv_out) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const rumor::ExperimentSpec spec = parse_experiment_spec(spec_json);
        const rumor::SweepResult result = rumor::run_sweep(spec);
        *csv_out = dup_string(rumor::rows_to_csv(result.rows));
        if (runlog_json_out) *runlog_json_out = dup_string(rumor::sweep_to_json(spec, result));
    });
}

int rumor_tree_sweep(const char* spec_json, char** summary_csv_out, char** runs_csv_out) {
    if (!spec_json || !summary_csv_out) return RUMOR_E_NULLPTR;
    return guarded([&] {
        const json j = json::parse(spec_json);
        rumor::TreeKind kind;
        const std::string kind_name = j.at("kind").get<std::string>();
        if (kind_name == "dregular") {
            kind.variant = rumor::TreeKind::Variant::DRegular;
            kind.d = j.at("d").get<std::uint32_t>();
        } else if (kind_name == "gw_poisson") {
            kind.variant = rumor::TreeKind::Variant::GWPoisson;
            kind.lambda = j.at("lambda").get<double>();
        } else {
            throw rumor::param_error("unknown tree kind: " + kind_name);
        }
        const auto result = rumor::tree_sweep(
            kind, j.at("p_grid").get<std::vector<double>>(), j.at("t").get<int>(),
            j.at("runs").get<int>(), j.at("master_seed").get<std::uint64_t>(),
            j.value("node_budget", rumor::kDefaultNodeBudget), j.value("threads", 0));
        *summary_csv_out = dup_string(rumor::tree_rows_to_csv(result));
        if (runs_csv_out) *runs_csv_out = dup_string(rumor::tree_runs_to_csv(result));
    });
}

int rumor_replicate(const char* preset, uint64_t master_seed, const char* out_dir, int threads) {
    if (!preset || !out_dir) return RUMOR_E_NULLPTR;
    return guarded([&] { rumor::replicate(preset, master_seed, out_dir, threads); });
}

} // extern "C"
