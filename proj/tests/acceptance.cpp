// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the process exits nonzero if any criterion fails. Individual criteria
// can be selected by passing their numbers as arguments.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rumor/analytics.hpp"
#include "rumor/cascade.hpp"
#include "rumor/errors.hpp"
#include "rumor/experiment.hpp"
#include "rumor/graph.hpp"
#include "rumor/inference.hpp"
#include "rumor/likelihood.hpp"
#include "rumor/replicate.hpp"
#include "rumor/tree_sim.hpp"

using namespace rumor;

namespace {

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

const SummaryRow& row_for(const SweepResult& result, double p) {
    for (const SummaryRow& row : result.rows)
        if (std::abs(row.p - p) < 1e-9) return row;
    throw std::logic_error("missing sweep row");
}

std::string fmt(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ---- criterion 1: sparse ER sweep bands --------------------------------

Check criterion_er_bands() {
    Check c;
    ExperimentSpec spec;
    spec.gen.kind = GeneratorSpec::Kind::ErdosRenyi;
    spec.gen.n = 100'000;
    spec.gen.avg_degree = 4.0;
    spec.p_grid = {0.05, 0.10, 0.50, 1.00};
    spec.rounds = {8};
    spec.runs_per_cell = 100;
    spec.master_seed = 20'240'817;
    const SweepResult result = run_sweep(spec);

    for (double p : {0.05, 0.10}) {
        const auto& row = row_for(result, p);
        c.require(row.successes == 0 && row.empty == 100,
                  "p=" + fmt(p) + " expected all-empty, got s=" + fmt(row.successes) +
                      " e=" + fmt(row.empty));
    }
    const auto& full = row_for(result, 1.00);
    c.require(full.successes >= 77 && full.successes <= 100,
              "p=1.00 successes=" + fmt(full.successes) + " outside [77,100]");
    const auto& half = row_for(result, 0.50);
    c.require(half.successes >= 27 && half.successes <= 57,
              "p=0.50 successes=" + fmt(half.successes) + " outside [27,57]");
    c.note("s(0.50)=" + fmt(half.successes) + " s(1.00)=" + fmt(full.successes));
    return c;
}

// ---- criterion 2: near-regular graph sweep bands -----------------------

Check criterion_config_bands() {
    Check c;
    ExperimentSpec spec;
    spec.gen.kind = GeneratorSpec::Kind::ConfigRegular;
    spec.gen.n = 100'000;
    spec.gen.d = 4;
    spec.p_grid = {0.30, 0.90, 0.95, 1.00};
    spec.rounds = {8};
    spec.runs_per_cell = 100;
    spec.master_seed = 20'240'818;
    const SweepResult result = run_sweep(spec);

    for (double p : {0.90, 0.95, 1.00}) {
        const auto& row = row_for(result, p);
        c.require(row.successes >= 95,
                  "p=" + fmt(p) + " successes=" + fmt(row.successes) + " < 95");
    }
    const auto& low = row_for(result, 0.30);
    c.require(low.successes <= 5, "p=0.30 successes=" + fmt(low.successes) + " > 5");
    c.require(low.empty >= 70, "p=0.30 empty=" + fmt(low.empty) + " < 70");
    c.note("s(0.90)=" + fmt(row_for(result, 0.90).successes) +
           " e(0.30)=" + fmt(low.empty));
    return c;
}

// ---- criterion 3: geometric graph sweep bands --------------------------

Check criterion_geometric_bands() {
    Check c;
    ExperimentSpec spec;
    spec.gen.kind = GeneratorSpec::Kind::Geometric;
    spec.gen.n = 100'000;
    spec.gen.expected_degree = 16.0;
    spec.p_grid = {0.05, 0.40};
    spec.rounds = {8};
    spec.runs_per_cell = 100;
    spec.master_seed = 20'240'819;
    const SweepResult result = run_sweep(spec);

    const auto& mid = row_for(result, 0.40);
    c.require(mid.successes >= 71 && mid.successes <= 97,
              "p=0.40 successes=" + fmt(mid.successes) + " outside [71,97]");
    const auto& low = row_for(result, 0.05);
    c.require(low.empty >= 90, "p=0.05 empty=" + fmt(low.empty) + " < 90");
    c.note("s(0.40)=" + fmt(mid.successes) + " e(0.05)=" + fmt(low.empty));
    return c;
}

// ---- criterion 4: distance-histogram shift across the transition -------

Check criterion_distance_shift() {
    Check c;
    ExperimentSpec spec;
    spec.gen.kind = GeneratorSpec::Kind::ErdosRenyi;
    spec.gen.n = 100'000;
    spec.gen.avg_degree = 4.0;
    spec.p_grid = {0.45, 0.55};
    spec.rounds = {8};
    spec.runs_per_cell = 100;
    spec.master_seed = 20'240'828;
    const SweepResult result = run_sweep(spec);

    const auto hist45 = distance_histogram(result, 0.45, 8);
    const auto hist55 = distance_histogram(result, 0.55, 8);
    NodeId max55 = 0;
    std::uint64_t far45 = 0, far55 = 0;
    for (const auto& [d, n] : hist55) {
        max55 = std::max(max55, d);
        if (d > 3) far55 += n;
    }
    for (const auto& [d, n] : hist45)
        if (d > 3) far45 += n;
    c.require(max55 <= 5, "p=0.55 max distance " + fmt(max55) + " > 5");
    c.require(far45 > far55, "mass beyond 3 not larger at p=0.45 (" + fmt(far45) +
                                 " vs " + fmt(far55) + ")");
    c.note("max55=" + fmt(max55) + " far45=" + fmt(far45) + " far55=" + fmt(far55));
    return c;
}

// ---- criterion 5: extinction fixed points vs branching simulation ------

double mc_extinction(bool poisson, double mu_or_p, std::uint32_t d, int runs, int gen_cap,
                     std::uint64_t seed) {
    Rng rng(seed);
    int extinct = 0;
    for (int r = 0; r < runs; ++r) {
        long pop = 1;
        for (int g = 0; g < gen_cap && pop > 0 && pop < 1000; ++g) {
            if (poisson)
                pop = std::poisson_distribution<long>(mu_or_p * pop)(rng);
            else
                pop = std::binomial_distribution<long>(pop * (d - 1), mu_or_p)(rng);
        }
        if (pop == 0) ++extinct;
    }
    return static_cast<double>(extinct) / runs;
}

Check criterion_fixed_points() {
    Check c;
    const int N = 1'000'000;

    c.require(std::abs(extinction_series_binomial(4, 1.0 / 3.0, 5).fixed_point - 1.0) < 1e-9,
              "critical binomial fixed point != 1");
    c.require(std::abs(extinction_series_poisson(1.0, 5).fixed_point - 1.0) < 1e-9,
              "critical poisson fixed point != 1");

    const double fp_b = extinction_series_binomial(4, 0.5, 5).fixed_point;
    const double freq_b = mc_extinction(false, 0.5, 4, N, 60, 101);
    double sigma = std::sqrt(fp_b * (1 - fp_b) / N);
    c.require(std::abs(freq_b - fp_b) <= 3 * sigma,
              "binomial fp " + fmt(fp_b) + " vs mc " + fmt(freq_b));

    const double fp_p = extinction_series_poisson(2.0, 5).fixed_point;
    const double freq_p = mc_extinction(true, 2.0, 0, N, 60, 102);
    sigma = std::sqrt(fp_p * (1 - fp_p) / N);
    c.require(std::abs(freq_p - fp_p) <= 3 * sigma,
              "poisson fp " + fmt(fp_p) + " vs mc " + fmt(freq_p));
    c.note("fp_b=" + fmt(fp_b) + " mc_b=" + fmt(freq_b) + " fp_p=" + fmt(fp_p) +
           " mc_p=" + fmt(freq_p));
    return c;
}

// ---- criterion 6: convergence rates ------------------------------------

Check criterion_convergence_rates() {
    Check c;
    // Subcritical: survival decays geometrically. The window stops at t=100
    // because beyond that 1 - x_t sinks under the spacing of doubles near 1.
    const auto sub = extinction_series_poisson(0.8, 100);
    for (std::size_t t = 2; t <= 100; ++t) {
        const double ratio = (1.0 - sub.values[t]) / (1.0 - sub.values[t - 1]);
        if (!(ratio <= 0.81)) {
            c.require(false, "ratio " + fmt(ratio) + " at t=" + fmt(t));
            break;
        }
    }
    // Critical: survival decays like 2/t, so t (1 - x_t) stays bounded.
    const auto crit = extinction_series_poisson(1.0, 10'000);
    double max_scaled = 0.0;
    for (std::size_t t = 1; t <= 10'000; ++t)
        max_scaled = std::max(max_scaled, t * (1.0 - crit.values[t]));
    c.require(max_scaled <= 3.0, "t(1-x_t) reached " + fmt(max_scaled));
    c.note("max t(1-x_t)=" + fmt(max_scaled));
    return c;
}

// ---- criterion 7: bessel accuracy and the all-children probability -----

Check criterion_bessel() {
    Check c;
    const double i0 = bessel_i0(20.0).value;
    const double asym = std::exp(20.0) / std::sqrt(2.0 * M_PI * 20.0) *
                        (1.0 + 1.0 / 160.0 + 9.0 / (128.0 * 400.0));
    const double rel = std::abs(i0 - asym) / i0;
    c.require(rel < 1e-3, "I_0(20) vs asymptotic rel err " + fmt(rel));

    const double lambda = 3.0, p = 0.5;
    const double q = prob_all_children_activated(lambda, p);
    double series = 0.0;
    for (int k = 1; k <= 200; ++k) {
        const double a = std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
        const double b = std::exp(-lambda * p + k * std::log(lambda * p) - std::lgamma(k + 1.0));
        series += a * b;
    }
    c.require(std::abs(q - series) < 1e-10, "series mismatch " + fmt(q - series));

    Rng rng(303);
    const int N = 1'000'000;
    std::poisson_distribution<int> children(lambda);
    std::poisson_distribution<int> activated(lambda * p);
    int hits = 0;
    for (int i = 0; i < N; ++i) {
        const int k = children(rng);
        if (k >= 1 && activated(rng) == k) ++hits;
    }
    const double freq = static_cast<double>(hits) / N;
    const double sigma = std::sqrt(q * (1 - q) / N);
    c.require(std::abs(freq - q) <= 3 * sigma, "mc " + fmt(freq) + " vs " + fmt(q));
    c.note("relerr(I0)=" + fmt(rel) + " q=" + fmt(q) + " mc=" + fmt(freq));
    return c;
}

// ---- criterion 8: likelihood argmax = posterior argmax -----------------

Check criterion_argmax_equivalence() {
    Check c;
    std::vector<Graph> graphs;
    auto line = [](NodeId n) {
        Graph g(n);
        for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        g.finalize();
        return g;
    };
    auto star = [](NodeId leaves) {
        Graph g(leaves + 1);
        for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
        g.finalize();
        return g;
    };
    auto cycle = [](NodeId n) {
        Graph g(n);
        for (NodeId v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        g.finalize();
        return g;
    };
    for (NodeId n = 2; n <= 8; ++n) graphs.push_back(line(n));
    for (NodeId l = 1; l <= 7; ++l) graphs.push_back(star(l));
    for (NodeId n = 3; n <= 8; ++n) graphs.push_back(cycle(n));

    int instances = 0;
    Rng rng(2718);
    for (const Graph& g : graphs) {
        for (int t : {1, 2}) {
            for (double p : {0.3, 0.7}) {
                const NodeId source =
                    std::uniform_int_distribution<NodeId>(0, g.node_count() - 1)(rng);
                const auto snap = simulate(g, source, CascadeParams{p, t}, rng);
                const auto& X = snap.active();

                std::vector<double> like(g.node_count(), 0.0);
                double max_like = 0.0;
                for (NodeId v = 0; v < g.node_count(); ++v) {
                    like[v] = exact_likelihood(g, X, v, p, t);
                    max_like = std::max(max_like, like[v]);
                }
                const auto post = posterior(like); // throws if all zero
                double total = 0.0, max_post = 0.0;
                for (double q : post) {
                    total += q;
                    max_post = std::max(max_post, q);
                }
                c.require(std::abs(total - 1.0) < 1e-12, "posterior sum " + fmt(total));

                std::set<NodeId> ml, map;
                for (NodeId v = 0; v < g.node_count(); ++v) {
                    if (like[v] >= max_like * (1 - 1e-12)) ml.insert(v);
                    if (post[v] >= max_post * (1 - 1e-12)) map.insert(v);
                }
                c.require(ml == map, "argmax sets differ on n=" + fmt(g.node_count()) +
                                         " t=" + fmt(t) + " p=" + fmt(p));
                ++instances;
                if (!c.ok) return c;
            }
        }
    }
    c.require(instances >= 50, "only " + fmt(instances) + " instances");
    c.note(fmt(instances) + " instances");
    return c;
}

// ---- criterion 9: candidate set vs brute force -------------------------

Check criterion_candidate_brute_force() {
    Check c;
    Rng rng(5150);
    int graphs_checked = 0;
    int attempts = 0;
    while (graphs_checked < 100 && attempts < 400) {
        ++attempts;
        const bool dense = attempts % 3 == 0;
        const NodeId n = static_cast<NodeId>(60 + (attempts * 7) % 141);
        const Graph g = dense ? gen_erdos_renyi(n, 12.0, 77'000 + attempts)
                              : gen_erdos_renyi(n, 3.0, 77'000 + attempts);
        const NodeId source = std::uniform_int_distribution<NodeId>(0, n - 1)(rng);
        const int t = dense ? 2 : 4;
        const auto snap = simulate(g, source, CascadeParams{dense ? 0.9 : 0.6, t}, rng);
        if (snap.active().empty()) continue;

        const auto res = candidate_set(g, snap.active(), static_cast<NodeId>(t));

        // brute force: per-node BFS, argmin of max distance
        NodeId best = kUnreachable;
        std::vector<NodeId> ecc(n, kUnreachable);
        for (NodeId v = 0; v < n; ++v) {
            const auto dm = bfs_distances(g, {v}, static_cast<NodeId>(t));
            NodeId worst = 0;
            for (NodeId u : snap.active()) {
                if (!dm.reachable(u)) {
                    worst = kUnreachable;
                    break;
                }
                worst = std::max(worst, dm.distance[u]);
            }
            ecc[v] = worst;
            best = std::min(best, worst);
        }
        std::vector<NodeId> expect;
        for (NodeId v = 0; v < n; ++v)
            if (ecc[v] == best) expect.push_back(v);

        c.require(res.t_prime == best, "t_prime mismatch on graph " + fmt(attempts));
        c.require(res.candidates == expect, "candidate set mismatch on graph " + fmt(attempts));
        // minimality: nobody covers the active set within t_prime - 1
        if (res.t_prime > 0) {
            for (NodeId v = 0; v < n; ++v)
                c.require(ecc[v] == kUnreachable || ecc[v] >= res.t_prime,
                          "minimality violated on graph " + fmt(attempts));
        }
        if (!c.ok) return c;
        ++graphs_checked;
    }
    c.require(graphs_checked == 100, "only " + fmt(graphs_checked) + " graphs checked");
    c.note(fmt(graphs_checked) + " graphs");
    return c;
}

// ---- criterion 10: tree estimator vs definition ------------------------

Check criterion_tree_brute_force() {
    Check c;
    Rng rng(909);
    int checked = 0;
    int trials = 0;
    while (checked < 1000 && trials < 40'000) {
        ++trials;
        std::uniform_int_distribution<int> pick_d(3, 5);
        std::uniform_int_distribution<int> pick_t(3, 7);
        std::uniform_real_distribution<double> pick_p(0.4, 0.9);
        const TreeKind kind{TreeKind::Variant::DRegular,
                            static_cast<std::uint32_t>(pick_d(rng)), 0};
        ActivationTree tree;
        try {
            tree = simulate_tree(kind, pick_p(rng), pick_t(rng), rng, 300);
        } catch (const resource_error&) {
            continue;
        }

        const std::uint32_t n = static_cast<std::uint32_t>(tree.node_count());
        const std::uint32_t fs = tree.frontier_size();
        const std::uint32_t fb = tree.frontier_begin();
        for (std::uint32_t f = fb; f < fb + fs; ++f)
            c.require(tree.depth_of(f) == static_cast<std::uint32_t>(tree.rounds),
                      "frontier node off depth t");

        const auto res = closest_candidate(tree);
        if (fs <= 1) {
            c.require(res.heuristic == TreeHeuristic::Failure, "missing failure flag");
            if (!c.ok) return c;
            continue;
        }

        // definition-based estimate: BFS distances inside the materialized
        // tree, candidates equidistant from every frontier node
        std::vector<std::vector<std::uint32_t>> adj(n);
        for (std::uint32_t v = 1; v < n; ++v) {
            adj[v].push_back(tree.parent[v]);
            adj[tree.parent[v]].push_back(v);
        }
        std::uint32_t best_node = n, best_dist = ~0u;
        for (std::uint32_t v = 0; v < n; ++v) {
            std::vector<std::uint32_t> dist(n, ~0u);
            std::vector<std::uint32_t> queue = {v};
            dist[v] = 0;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (std::uint32_t w : adj[queue[i]])
                    if (dist[w] == ~0u) {
                        dist[w] = dist[queue[i]] + 1;
                        queue.push_back(w);
                    }
            bool equi = true;
            for (std::uint32_t f = fb + 1; f < fb + fs; ++f)
                if (dist[f] != dist[fb]) {
                    equi = false;
                    break;
                }
            if (equi && dist[fb] < best_dist) {
                best_dist = dist[fb];
                best_node = v;
            }
        }
        c.require(res.heuristic == TreeHeuristic::Candidate, "estimator failed with frontier >= 2");
        c.require(res.candidate_node == best_node && res.candidate_depth == tree.depth_of(best_node),
                  "estimate disagrees with definition on trial " + fmt(trials));
        if (!c.ok) return c;
        ++checked;
    }
    c.require(checked == 1000, "only " + fmt(checked) + " trees checked");
    c.note(fmt(checked) + " trees");
    return c;
}

// ---- criterion 11: detection probability lower bound -------------------

Check criterion_detection_bound() {
    Check c;
    const TreeKind kind{TreeKind::Variant::DRegular, 4, 0};
    const int runs = 10'000;
    const auto result = tree_sweep(kind, {0.5}, 30, runs, 424'242);
    const auto& row = result.rows.front();
    c.require(row.budget_aborts == 0, "budget aborts present");

    const double bound = 0.0625;
    const double sigma = std::sqrt(bound * (1 - bound) / runs);
    const double freq = static_cast<double>(row.successes) / runs;
    c.require(freq >= bound - 3 * sigma,
              "success rate " + fmt(freq) + " < " + fmt(bound - 3 * sigma));

    // depth tail: counts fall roughly geometrically. The mass at depth 0 is
    // governed by a different event (meeting point at the root), so the
    // log-linear window starts at depth 1.
    std::vector<double> log_ratios;
    bool decreasing = true;
    for (std::uint32_t d = 1;; ++d) {
        const auto it = row.depth_counts.find(d);
        const auto next = row.depth_counts.find(d + 1);
        if (it == row.depth_counts.end() || next == row.depth_counts.end()) break;
        if (next->second < 30) break;
        if (next->second >= it->second) decreasing = false;
        log_ratios.push_back(std::log(static_cast<double>(next->second) / it->second));
    }
    c.require(decreasing, "depth counts not decreasing");
    c.require(log_ratios.size() >= 2, "tail too short to assess");
    double mean = 0.0;
    for (double r : log_ratios) mean += r;
    mean /= log_ratios.size();
    for (double r : log_ratios)
        c.require(std::abs(r - mean) <= 0.5,
                  "log-ratio " + fmt(r) + " far from mean " + fmt(mean));
    c.note("freq=" + fmt(freq) + " tail_ratios=" + fmt(log_ratios.size()) +
           " mean_log_ratio=" + fmt(mean));
    return c;
}

// ---- criterion 12: byte-identical replay -------------------------------

Check criterion_replay() {
    Check c;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rumor_acceptance_replay";
    fs::create_directories(dir);

    // generators
    for (int kind = 0; kind < 3; ++kind) {
        GeneratorSpec gs;
        gs.kind = static_cast<GeneratorSpec::Kind>(kind);
        gs.n = 500;
        gs.avg_degree = 4.0;
        gs.d = 4;
        gs.expected_degree = 12.0;
        gs.seed = 99;
        const fs::path a = dir / "a.edges";
        const fs::path b = dir / "b.edges";
        write_edge_list(generate(gs), a.string());
        write_edge_list(generate(gs), b.string());
        std::ifstream fa(a), fb(b);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        c.require(sa.str() == sb.str(), "generator replay differs (kind " + fmt(kind) + ")");
    }

    // cascade snapshots
    const Graph g = gen_erdos_renyi(500, 4.0, 31);
    Rng r1(7), r2(7);
    c.require(simulate(g, 3, CascadeParams{0.6, 5}, r1).to_json() ==
                  simulate(g, 3, CascadeParams{0.6, 5}, r2).to_json(),
              "cascade replay differs");

    // experiment sweeps across thread counts
    ExperimentSpec spec;
    spec.gen.kind = GeneratorSpec::Kind::ErdosRenyi;
    spec.gen.n = 400;
    spec.gen.avg_degree = 4.0;
    spec.p_grid = {0.3, 0.7};
    spec.rounds = {4};
    spec.runs_per_cell = 40;
    spec.master_seed = 606;
    spec.threads = 1;
    const auto serial = run_sweep(spec);
    spec.threads = 4;
    const auto parallel = run_sweep(spec);
    c.require(sweep_to_json(spec, serial) == sweep_to_json(spec, parallel),
              "sweep replay differs across thread counts");

    // tree sweeps
    const TreeKind kind{TreeKind::Variant::GWPoisson, 0, 4.0};
    c.require(tree_runs_to_csv(tree_sweep(kind, {0.4, 0.6}, 8, 50, 11, kDefaultNodeBudget, 4)) ==
                  tree_runs_to_csv(tree_sweep(kind, {0.4, 0.6}, 8, 50, 11, kDefaultNodeBudget, 1)),
              "tree sweep replay differs");

    fs::remove_all(dir);
    return c;
}

} // namespace

int main(int argc, char** argv) {
    using Entry = std::pair<const char*, std::function<Check()>>;
    const std::vector<Entry> criteria = {
        {"sparse ER sweep bands", criterion_er_bands},
        {"near-regular sweep bands", criterion_config_bands},
        {"geometric sweep bands", criterion_geometric_bands},
        {"distance histogram shift", criterion_distance_shift},
        {"extinction fixed points", criterion_fixed_points},
        {"convergence rates", criterion_convergence_rates},
        {"bessel and all-children probability", criterion_bessel},
        {"argmax equivalence", criterion_argmax_equivalence},
        {"candidate set brute force", criterion_candidate_brute_force},
        {"tree estimator brute force", criterion_tree_brute_force},
        {"detection probability bound", criterion_detection_bound},
        {"byte-identical replay", criterion_replay},
    };

    std::set<std::size_t> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

    bool all_ok = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (!selected.empty() && !selected.count(i + 1)) continue;
        const auto start = std::chrono::steady_clock::now();
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %-38s %s (%.1fs)%s%s\n", i + 1, criteria[i].first,
                    c.ok ? "PASS" : "FAIL", secs, c.detail.empty() ? "" : "  -- ",
                    c.detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
