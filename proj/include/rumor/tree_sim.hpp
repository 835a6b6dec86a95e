#pragma once

#include <cstdint>
#include <vector>

#include "rumor/rng.hpp"

namespace rumor {

struct TreeKind {
    enum class Variant { DRegular, GWPoisson };
    Variant variant = Variant::DRegular;
    std::uint32_t d = 4;   // DRegular, d >= 2
    double lambda = 4.0;   // GWPoisson, lambda > 0
};

// Lazily materialized activation tree: only activated nodes exist. Nodes are
// indexed level by level, so the children of node i occupy the contiguous
// range [first_child[i], first_child[i] + child_count[i]). Node 0 is the root.
struct ActivationTree {
    std::vector<std::uint32_t> parent;      // parent[0] == 0
    std::vector<std::uint32_t> first_child;
    std::vector<std::uint32_t> child_count;
    std::vector<std::uint32_t> level_offset; // level_offset[k] = first node at depth k
    int rounds = 0;

    std::size_t node_count() const { return parent.size(); }
    std::uint32_t depth_of(std::uint32_t v) const;
    // Nodes activated at exactly round t (empty if the process died out).
    std::uint32_t frontier_begin() const;
    std::uint32_t frontier_size() const;
};

enum class TreeStatus { DiedOut, Survived };
enum class TreeHeuristic { Failure, Candidate };

struct TreeRunResult {
    TreeStatus status = TreeStatus::DiedOut;
    std::uint32_t frontier_size = 0;
    TreeHeuristic heuristic = TreeHeuristic::Failure;
    std::uint32_t candidate_node = 0;  // node index of the estimate, valid when Candidate
    std::uint32_t candidate_depth = 0; // dist(estimate, root), valid when heuristic == Candidate
    bool success = false;              // estimate equals the root
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Runs the cascade on the infinite tree without materializing it: the root
// spawns Bin(d, p) (or Po(lambda*p), by Poisson thinning) active children,
// every later node Bin(d-1, p) (or Po(lambda*p)). Aborts with a resource
// error if more than node_budget nodes are materialized.
ActivationTree simulate_tree(const TreeKind& kind, double p, int t, Rng& rng,
                             std::uint64_t node_budget = kDefaultNodeBudget);

// Tree closest-candidate estimator: the rooted LCA of the frontier. The
// candidate set extends into never-activated subtrees hanging off the path
// above the meeting point, but all of those are farther from the frontier
// than the meeting point itself, so the minimum-distance candidate is always
// the first node (walking down from the root) with >= 2 frontier-bearing
// child subtrees. A frontier of size <= 1 is reported as a failure.
TreeRunResult closest_candidate(const ActivationTree& tree);

} // namespace rumor
