#include "rumor/likelihood.hpp"

#include <algorithm>
#include <cmath>

#include "rumor/cascade.hpp"
#include "rumor/errors.hpp"

namespace rumor {
namespace {

struct Enumerator {
    const Graph& g;
    std::vector<NodeId> target; // X, sorted
    double p;
    int t;
    std::vector<char> informed;
    double total = 0.0;

    bool frontier_is_target(const std::vector<NodeId>& frontier) const {
        return frontier == target;
    }

    // Expands all outcomes of the current round's attempt list, then recurses
    // into the next round with the resulting frontier.
    void expand_round(const std::vector<NodeId>& frontier, int round, double prob) {
        if (round == t) {
            if (frontier_is_target(frontier)) total += prob;
            return;
        }
        if (frontier.empty()) {
            // Process died out; frontiers stay empty through round t.
            if (target.empty()) total += prob;
            return;
        }
        std::vector<std::pair<NodeId, NodeId>> attempts;
        for (NodeId u : frontier)
            for (NodeId w : g.neighbors(u))
                if (!informed[w]) attempts.emplace_back(u, w);

        std::vector<char> succeeded(attempts.size(), 0);
        enumerate_attempts(attempts, succeeded, 0, round, prob);
    }

    void enumerate_attempts(const std::vector<std::pair<NodeId, NodeId>>& attempts,
                            std::vector<char>& succeeded, std::size_t i, int round, double prob) {
        if (prob == 0.0) return;
        if (i == attempts.size()) {
            std::vector<NodeId> next;
            for (std::size_t a = 0; a < attempts.size(); ++a)
                if (succeeded[a]) next.push_back(attempts[a].second);
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            for (NodeId w : next) informed[w] = 1;
            expand_round(next, round + 1, prob);
            for (NodeId w : next) informed[w] = 0;
            return;
        }
        succeeded[i] = 0;
        enumerate_attempts(attempts, succeeded, i + 1, round, prob * (1.0 - p));
        succeeded[i] = 1;
        enumerate_attempts(attempts, succeeded, i + 1, round, prob * p);
        succeeded[i] = 0;
    }
};

} // namespace

double exact_likelihood(const Graph& g, const std::vector<NodeId>& X, NodeId v, double p, int t,
                        std::size_t attempt_budget) {
    if (!g.is_valid_node(v)) throw param_error("exact_likelihood: invalid source id");
    if (p < 0.0 || p > 1.0) throw param_error("exact_likelihood: p must be in [0,1]");
    if (t < 0) throw param_error("exact_likelihood: t must be >= 0");
    for (NodeId u : X)
        if (!g.is_valid_node(u)) throw param_error("exact_likelihood: invalid node in X");

    // Feasibility guard: every attempt originates at a node within t-1 hops
    // of v, so the degree sum over that ball bounds the attempt count.
    if (t > 0) {
        const DistanceMap dm = bfs_distances(g, {v}, static_cast<NodeId>(t - 1));
        std::size_t bound = 0;
        for (NodeId u = 0; u < g.node_count(); ++u)
            if (dm.reachable(u)) bound += g.degree(u);
        if (bound > attempt_budget)
            throw resource_error(
                "exact_likelihood: enumeration budget exceeded; use mc_likelihood");
    }

    Enumerator e{g, X, p, t, std::vector<char>(g.node_count(), 0)};
    std::sort(e.target.begin(), e.target.end());
    e.target.erase(std::unique(e.target.begin(), e.target.end()), e.target.end());
    e.informed[v] = 1;
    e.expand_round({v}, 0, 1.0);
    return e.total;
}

McEstimate mc_likelihood(const Graph& g, const std::vector<NodeId>& X, NodeId v, double p, int t,
                         std::uint64_t runs, Rng& rng) {
    if (runs < 1) throw param_error("mc_likelihood: runs must be >= 1");
    std::vector<NodeId> target = X;
    std::sort(target.begin(), target.end());
    target.erase(std::unique(target.begin(), target.end()), target.end());

    const CascadeParams params{p, t};
    std::uint64_t hits = 0;
    for (std::uint64_t r = 0; r < runs; ++r) {
        const CascadeSnapshot snap = simulate(g, v, params, rng);
        if (snap.active() == target) ++hits;
    }
    McEstimate est;
    est.runs = runs;
    est.estimate = static_cast<double>(hits) / static_cast<double>(runs);
    est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(runs));
    return est;
}

std::vector<double> posterior(const std::vector<double>& likelihoods) {
    double sum = 0.0;
    for (double x : likelihoods) {
        if (x < 0.0) throw param_error("posterior: negative likelihood");
        sum += x;
    }
    if (sum == 0.0) throw infeasible_error("posterior: observation has zero probability");
    std::vector<double> out(likelihoods.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = likelihoods[i] / sum;
    return out;
}

} // namespace rumor
