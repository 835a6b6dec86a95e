#include "rumor/inference.hpp"

#include <algorithm>
#include <sstream>

#include "rumor/errors.hpp"

namespace rumor {
namespace {

// BFS from one node, truncated at depth_cap, calling visit(node, dist).
template <class Visit>
void truncated_bfs(const Graph& g, NodeId start, NodeId depth_cap, std::vector<NodeId>& dist_buf,
                   std::vector<NodeId>& queue_buf, Visit&& visit) {
    dist_buf.assign(g.node_count(), kUnreachable);
    queue_buf.clear();
    dist_buf[start] = 0;
    queue_buf.push_back(start);
    visit(start, 0);
    for (std::size_t head = 0; head < queue_buf.size(); ++head) {
        const NodeId u = queue_buf[head];
        const NodeId du = dist_buf[u];
        if (du >= depth_cap) continue;
        for (NodeId w : g.neighbors(u)) {
            if (dist_buf[w] == kUnreachable) {
                dist_buf[w] = du + 1;
                queue_buf.push_back(w);
                visit(w, du + 1);
            }
        }
    }
}

} // namespace

CandidateResult candidate_set(const Graph& g, const std::vector<NodeId>& active, NodeId depth_cap) {
    CandidateResult res;
    if (active.empty()) {
        res.status = CandidateResult::Status::EmptyActiveSet;
        return res;
    }
    std::vector<NodeId> sorted_active = active;
    std::sort(sorted_active.begin(), sorted_active.end());
    sorted_active.erase(std::unique(sorted_active.begin(), sorted_active.end()),
                        sorted_active.end());
    for (NodeId u : sorted_active)
        if (!g.is_valid_node(u)) throw param_error("candidate_set: invalid active node id");

    if (sorted_active.size() == 1) {
        res.t_prime = 0;
        res.candidates = sorted_active;
        return res;
    }

    std::vector<NodeId> dist_buf, queue_buf;

    // Phase 1: accumulate the running max distance over a set of probe
    // actives. Nodes not reached by every probe within depth_cap cannot be
    // candidates (their max distance exceeds the cap, and t_prime <= cap).
    const std::size_t n_probes = std::min<std::size_t>(sorted_active.size(), 32);
    std::vector<NodeId> run_max(g.node_count(), 0);
    std::vector<std::uint32_t> reach_count(g.node_count(), 0);
    for (std::size_t i = 0; i < n_probes; ++i) {
        truncated_bfs(g, sorted_active[i], depth_cap, dist_buf, queue_buf, [&](NodeId v, NodeId d) {
            run_max[v] = std::max(run_max[v], d);
            ++reach_count[v];
        });
    }
    std::vector<NodeId> survivors;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (reach_count[v] == n_probes) survivors.push_back(v);

    NodeId best = kUnreachable;
    std::vector<std::pair<NodeId, NodeId>> exact; // (node, max distance)
    if (n_probes == sorted_active.size()) {
        for (NodeId v : survivors) {
            exact.emplace_back(v, run_max[v]);
            best = std::min(best, run_max[v]);
        }
    } else {
        // Phase 2: verify each survivor exactly against the full active set.
        std::vector<char> is_active(g.node_count(), 0);
        for (NodeId u : sorted_active) is_active[u] = 1;
        for (NodeId v : survivors) {
            NodeId vmax = 0;
            std::size_t covered = 0;
            truncated_bfs(g, v, depth_cap, dist_buf, queue_buf, [&](NodeId w, NodeId d) {
                if (is_active[w]) {
                    ++covered;
                    vmax = std::max(vmax, d);
                }
            });
            if (covered == sorted_active.size()) {
                exact.emplace_back(v, vmax);
                best = std::min(best, vmax);
            }
        }
    }
    if (best == kUnreachable)
        throw resource_error("candidate_set: no candidate within depth cap");

    res.t_prime = best;
    for (const auto& [v, m] : exact)
        if (m == best) res.candidates.push_back(v);
    std::sort(res.candidates.begin(), res.candidates.end());
    return res;
}

RunOutcome evaluate_run(const Graph& g, const CascadeSnapshot& snapshot,
                        const CandidateResult& result) {
    RunOutcome out;
    if (result.status == CandidateResult::Status::EmptyActiveSet) {
        out.classification = RunClassification::Empty;
        return out;
    }
    const DistanceMap dm = bfs_distances(g, {snapshot.source}, kUnreachable);
    bool member = false;
    std::uint64_t sum = 0;
    for (NodeId v : result.candidates) {
        if (v == snapshot.source) member = true;
        const NodeId d = dm.distance[v];
        out.candidate_distances.push_back(d);
        out.max_candidate_distance = std::max(out.max_candidate_distance, d);
        sum += d;
    }
    out.classification = member ? RunClassification::Success : RunClassification::Wrong;
    out.avg_candidate_distance =
        result.candidates.empty() ? 0.0
                                  : static_cast<double>(sum) / result.candidates.size();
    return out;
}

namespace {

void emit_candidates(std::ostringstream& os, const CandidateResult& result) {
    os << "{\"status\":\""
       << (result.status == CandidateResult::Status::Ok ? "ok" : "empty_active_set")
       << "\",\"t_prime\":" << result.t_prime << ",\"candidates\":[";
    for (std::size_t i = 0; i < result.candidates.size(); ++i) {
        if (i) os << ',';
        os << result.candidates[i];
    }
    os << ']';
    if (!result.candidates.empty()) os << ",\"representative\":" << result.candidates.front();
}

} // namespace

std::string to_json(const CandidateResult& result) {
    std::ostringstream os;
    emit_candidates(os, result);
    os << '}';
    return os.str();
}

std::string to_json(const CandidateResult& result, const RunOutcome& outcome) {
    std::ostringstream os;
    emit_candidates(os, result);
    const char* cls = outcome.classification == RunClassification::Success ? "success"
                      : outcome.classification == RunClassification::Wrong ? "wrong"
                                                                           : "empty";
    os << ",\"classification\":\"" << cls << '"';
    if (outcome.classification != RunClassification::Empty) {
        os << ",\"avg_distance\":" << outcome.avg_candidate_distance
           << ",\"max_distance\":" << outcome.max_candidate_distance;
    }
    os << '}';
    return os.str();
}

} // namespace rumor
