#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rumor/graph.hpp"
#include "rumor/rng.hpp"

namespace rumor {

struct CascadeParams {
    double p = 0.5;  // activation probability, [0,1]
    int rounds = 1;  // observation round t >= 0
};

// One cascade run. history[r] is the frontier I_r (sorted ascending);
// history[0] = {source}. If the process dies out early, later frontiers are
// empty. active() is the observed X* = I_t.
struct CascadeSnapshot {
    NodeId source = 0;
    std::vector<std::vector<NodeId>> history;

    const std::vector<NodeId>& active() const { return history.back(); }
    std::vector<NodeId> informed() const;
    std::string to_json() const;
};

// Decides one directed activation attempt from an active node toward a
// currently uninformed neighbor. Attempts are made in ascending (active id,
// neighbor id) order, one decision per attempt, so runs are replayable.
using AttemptDecider = std::function<bool(NodeId from, NodeId to)>;

CascadeSnapshot simulate_with(const Graph& g, NodeId source, const CascadeParams& params,
                              const AttemptDecider& attempt);

// Standard simulation: one uniform draw per attempt from rng, success iff < p.
CascadeSnapshot simulate(const Graph& g, NodeId source, const CascadeParams& params, Rng& rng);

} // namespace rumor
