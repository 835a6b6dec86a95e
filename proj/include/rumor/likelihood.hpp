#pragma once

#include <vector>

#include "rumor/graph.hpp"
#include "rumor/rng.hpp"

namespace rumor {

inline constexpr std::size_t kDefaultAttemptBudget = 24;

// Exact Pr[X* = X | source = v] by round-synchronous enumeration of every
// activation-attempt outcome. An attempt exists only when its origin is
// active and its target still uninformed, so outcomes are expanded
// round-by-round, never as global edge subsets. Throws a resource error when
// the potential attempt count exceeds attempt_budget (use mc_likelihood
// instead).
double exact_likelihood(const Graph& g, const std::vector<NodeId>& X, NodeId v, double p, int t,
                        std::size_t attempt_budget = kDefaultAttemptBudget);

struct McEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t runs = 0;
};

// Fraction of simulated runs from v whose round-t frontier equals X exactly,
// with binomial standard error.
McEstimate mc_likelihood(const Graph& g, const std::vector<NodeId>& X, NodeId v, double p, int t,
                         std::uint64_t runs, Rng& rng);

// Posterior over sources under the uniform prior: likelihood(v) / sum.
// Throws an infeasible-observation error when all likelihoods are zero.
std::vector<double> posterior(const std::vector<double>& likelihoods);

} // namespace rumor
