#pragma once

#include <string>
#include <vector>

#include "rumor/cascade.hpp"
#include "rumor/graph.hpp"

namespace rumor {

// Minimal-radius ball intersection around the active set: the candidates are
// exactly the nodes minimizing max_{u active} dist(v, u), and t_prime is that
// minimal max-distance.
struct CandidateResult {
    enum class Status { Ok, EmptyActiveSet };
    Status status = Status::Ok;
    NodeId t_prime = 0;
    std::vector<NodeId> candidates; // sorted ascending; representative = front()
};

// Throws a resource error ("no candidate within cap") if no node is within
// depth_cap of every active node; for a genuine round-t cascade with
// depth_cap >= t this cannot happen since the source qualifies.
CandidateResult candidate_set(const Graph& g, const std::vector<NodeId>& active, NodeId depth_cap);

enum class RunClassification { Success, Wrong, Empty };

struct RunOutcome {
    RunClassification classification = RunClassification::Empty;
    double avg_candidate_distance = 0.0;
    NodeId max_candidate_distance = 0;
    std::vector<NodeId> candidate_distances; // dist(source, v) per candidate
};

// Classifies a run (source membership in the candidate set) and reports the
// candidate-to-source distance statistics.
RunOutcome evaluate_run(const Graph& g, const CascadeSnapshot& snapshot,
                        const CandidateResult& result);

std::string to_json(const CandidateResult& result);
std::string to_json(const CandidateResult& result, const RunOutcome& outcome);

} // namespace rumor
