#include "rumor/tree_sim.hpp"

#include <algorithm>

#include "rumor/errors.hpp"

namespace rumor {

std::uint32_t ActivationTree::depth_of(std::uint32_t v) const {
    const auto it = std::upper_bound(level_offset.begin(), level_offset.end(), v);
    return static_cast<std::uint32_t>(it - level_offset.begin()) - 1;
}

std::uint32_t ActivationTree::frontier_begin() const {
    return frontier_size() == 0 ? 0 : level_offset[static_cast<std::size_t>(rounds)];
}

std::uint32_t ActivationTree::frontier_size() const {
    // The frontier exists only if the deepest materialized level is at depth t.
    if (static_cast<int>(level_offset.size()) != rounds + 1) return 0;
    return static_cast<std::uint32_t>(node_count()) - level_offset.back();
}

ActivationTree simulate_tree(const TreeKind& kind, double p, int t, Rng& rng,
                             std::uint64_t node_budget) {
    if (t < 1) throw param_error("simulate_tree: t must be >= 1");
    if (p < 0.0 || p > 1.0) throw param_error("simulate_tree: p must be in [0,1]");
    if (kind.variant == TreeKind::Variant::DRegular && kind.d < 2)
        throw param_error("simulate_tree: d must be >= 2");
    if (kind.variant == TreeKind::Variant::GWPoisson && !(kind.lambda > 0.0))
        throw param_error("simulate_tree: lambda must be > 0");

    const bool poisson = kind.variant == TreeKind::Variant::GWPoisson;
    const double mu = poisson ? kind.lambda * p : 0.0;

    ActivationTree tree;
    tree.rounds = t;
    tree.parent = {0};
    tree.first_child = {1};
    tree.child_count = {0};
    tree.level_offset = {0};

    std::uint32_t level_begin = 0;
    std::uint32_t level_end = 1;
    for (int depth = 0; depth < t && level_begin < level_end; ++depth) {
        tree.level_offset.push_back(level_end);
        for (std::uint32_t v = level_begin; v < level_end; ++v) {
            std::uint32_t spawned = 0;
            if (poisson) {
                spawned = static_cast<std::uint32_t>(std::poisson_distribution<long>(mu)(rng));
            } else {
                // Root has d potential children, every descendant d-1.
                const std::uint32_t fan = depth == 0 ? kind.d : kind.d - 1;
                spawned = static_cast<std::uint32_t>(
                    std::binomial_distribution<int>(static_cast<int>(fan), p)(rng));
            }
            tree.first_child[v] = static_cast<std::uint32_t>(tree.node_count());
            tree.child_count[v] = spawned;
            if (tree.node_count() + spawned > node_budget)
                throw resource_error("simulate_tree: node budget exceeded");
            for (std::uint32_t c = 0; c < spawned; ++c) {
                tree.parent.push_back(v);
                tree.first_child.push_back(0);
                tree.child_count.push_back(0);
            }
        }
        level_begin = level_end;
        level_end = static_cast<std::uint32_t>(tree.node_count());
    }
    return tree;
}

TreeRunResult closest_candidate(const ActivationTree& tree) {
    TreeRunResult res;
    res.frontier_size = tree.frontier_size();
    res.status = res.frontier_size > 0 ? TreeStatus::Survived : TreeStatus::DiedOut;
    if (res.frontier_size <= 1) {
        res.heuristic = TreeHeuristic::Failure;
        return res;
    }

    // Mark every ancestor of a frontier node (frontier-bearing nodes).
    std::vector<char> bearing(tree.node_count(), 0);
    const std::uint32_t fb = tree.frontier_begin();
    for (std::uint32_t v = fb; v < tree.node_count(); ++v) {
        std::uint32_t u = v;
        while (!bearing[u]) {
            bearing[u] = 1;
            if (u == 0) break;
            u = tree.parent[u];
        }
    }

    // Descend from the root while exactly one child subtree carries frontier
    // nodes; the first branching node is the meeting point.
    std::uint32_t node = 0;
    std::uint32_t depth = 0;
    while (true) {
        std::uint32_t bearing_children = 0;
        std::uint32_t next = 0;
        for (std::uint32_t c = 0; c < tree.child_count[node]; ++c) {
            const std::uint32_t child = tree.first_child[node] + c;
            if (bearing[child]) {
                ++bearing_children;
                next = child;
            }
        }
        if (bearing_children == 1) {
            node = next;
            ++depth;
        } else {
            break;
        }
    }
    res.heuristic = TreeHeuristic::Candidate;
    res.candidate_node = node;
    res.candidate_depth = depth;
    res.success = depth == 0;
    return res;
}

} // namespace rumor
